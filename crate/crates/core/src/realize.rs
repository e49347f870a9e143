//! Realizing the zero set of an arbitrary polynomial system as the variety
//! of a mast over an acyclic quiver without double arrows.

use serde_json::{json, Value};

use crate::detour::Mast;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{ideal_equal, IdealBasis};
use crate::poly::{Monomial, Polynomial};
use crate::quiver::{AlgebraElement, Path, Presentation, Quiver};
use crate::variety::variety_generators;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationInput {
    pub field: Field,
    pub nvars: usize,
    pub polynomials: Vec<Polynomial>,
}

impl RealizationInput {
    pub fn new(field: Field, nvars: usize, polynomials: Vec<Polynomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidInput(
                "at least one variable is required".into(),
            ));
        }
        for f in &polynomials {
            if f.nvars() != nvars || f.field() != field {
                return Err(Error::InvalidInput(
                    "polynomials live in different rings".into(),
                ));
            }
        }
        Ok(RealizationInput {
            field,
            nvars,
            polynomials,
        })
    }

    /// One polynomial per line in `X[i]` syntax; blank lines and `#`
    /// comments are skipped. `nvars` defaults to the largest index used.
    pub fn parse(text: &str, field: Field, nvars: Option<usize>) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let used = lines
            .iter()
            .map(|(_, l)| Polynomial::max_variable_index(l))
            .max()
            .unwrap_or(0);
        let nvars = match nvars {
            Some(n) if n < used => {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: used,
                })
            }
            Some(n) => n,
            None => used,
        };
        let mut polys = Vec::with_capacity(lines.len());
        for (line, l) in lines {
            let f = Polynomial::parse(l, field, nvars).map_err(|e| match e {
                Error::Parse {
                    column, message, ..
                } => Error::Parse {
                    line,
                    column,
                    message,
                },
                other => other,
            })?;
            polys.push(f);
        }
        RealizationInput::new(field, nvars, polys)
    }
}

/// Where a variable of the multilinear system comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariableOrigin {
    /// Copy `copy` (1-based) of input variable `source` (0-based).
    Copy { source: usize, copy: usize },
    /// Extra variable constrained to zero.
    Padding,
}

/// A system in which no variable appears squared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multilinear {
    pub field: Field,
    pub polynomials: Vec<Polynomial>,
    pub origins: Vec<VariableOrigin>,
}

impl Multilinear {
    pub fn nvars(&self) -> usize {
        self.origins.len()
    }

    pub fn variable_name(&self, v: usize) -> String {
        match self.origins[v] {
            VariableOrigin::Copy { source, copy } => format!("X[{}]_{copy}", source + 1),
            VariableOrigin::Padding => "padding".into(),
        }
    }
}

/// Replaces `X_i^r` by a product of `r` distinct copies of `X_i` and adds
/// the equations `X_i1 - X_it` identifying the copies. Every input
/// variable keeps at least one copy.
pub fn multilinearize(input: &RealizationInput) -> Multilinear {
    let m = input.nvars;
    let mut degrees = vec![1u32; m];
    for f in &input.polynomials {
        for (i, d) in degrees.iter_mut().enumerate() {
            *d = (*d).max(f.degree_in(i));
        }
    }
    let mut offsets = Vec::with_capacity(m);
    let mut origins = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        offsets.push(origins.len());
        origins.extend((1..=d as usize).map(|copy| VariableOrigin::Copy { source: i, copy }));
    }
    let n = origins.len();
    let mut polynomials = Vec::new();
    for f in &input.polynomials {
        let mut g = Polynomial::zero(input.field, n);
        for (mono, c) in f.terms() {
            let mut e = vec![0u32; n];
            for (i, &r) in mono.exponents().iter().enumerate() {
                for s in 0..r as usize {
                    e[offsets[i] + s] = 1;
                }
            }
            g.add_term(Monomial::from_exponents(e), c.clone());
        }
        polynomials.push(g);
    }
    for (i, &d) in degrees.iter().enumerate() {
        for t in 1..d as usize {
            let x = Polynomial::var(input.field, n, offsets[i]);
            let y = Polynomial::var(input.field, n, offsets[i] + t);
            polynomials.push(&x - &y);
        }
    }
    Multilinear {
        field: input.field,
        polynomials,
        origins,
    }
}

#[derive(Debug, Clone)]
pub struct Realization {
    pub system: Multilinear,
    pub presentation: Presentation,
    pub mast: Mast,
}

impl Realization {
    /// JSON table matching ring variables with input variables and detours.
    pub fn variable_map(&self) -> Value {
        let quiver = &self.presentation.quiver;
        let vars: Vec<Value> = self
            .system
            .origins
            .iter()
            .enumerate()
            .map(|(v, o)| {
                let (source, copy) = match o {
                    VariableOrigin::Copy { source, copy } => {
                        (json!(format!("X[{}]", source + 1)), json!(copy))
                    }
                    VariableOrigin::Padding => (Value::Null, Value::Null),
                };
                json!({
                    "variable": format!("X[{}]", v + 1),
                    "source": source,
                    "copy": copy,
                    "detour": {
                        "arrow": format!("gamma{}", v + 1),
                        "u": self.mast.prefix(2 * v).display(quiver),
                    },
                })
            })
            .collect();
        json!({ "version": 1, "mast": self.mast.display(quiver), "variables": vars })
    }
}

fn chain_quiver(m: usize) -> Result<Quiver> {
    let mut q = Quiver::new();
    for v in 1..=2 * m + 1 {
        q.add_vertex(&v.to_string())?;
    }
    for i in 1..=m {
        let (a, b, c) = (
            (2 * i - 1).to_string(),
            (2 * i).to_string(),
            (2 * i + 1).to_string(),
        );
        q.add_arrow(&format!("alpha{i}"), &a, &b)?;
        q.add_arrow(&format!("beta{i}"), &b, &c)?;
        q.add_arrow(&format!("gamma{i}"), &a, &c)?;
    }
    Ok(q)
}

/// Builds the quiver on `2m+1` vertices with arrows `alpha_i`, `beta_i`,
/// `gamma_i`, the mast `beta_m alpha_m ... beta_1 alpha_1`, and one relation
/// per multilinear polynomial, replacing `beta_i alpha_i` by `gamma_i` for
/// each variable in a monomial.
pub fn realize_variety(input: &RealizationInput) -> Result<Realization> {
    let mut system = multilinearize(input);
    let field = system.field;
    let touches_single = |s: &Multilinear| s.polynomials.iter().any(|f| f.degree_in(0) > 0);
    if system.nvars() == 1 && touches_single(&system) {
        system.origins.push(VariableOrigin::Padding);
        let n = system.nvars();
        system.polynomials = system.polynomials.iter().map(|f| f.extend(n)).collect();
        system.polynomials.push(Polynomial::var(field, n, n - 1));
    }
    let m = system.nvars();
    let quiver = chain_quiver(m)?;
    let mut relations = Vec::new();
    for f in &system.polynomials {
        let mut r = AlgebraElement::zero(field);
        for (mono, c) in f.terms() {
            let mut arrows = Vec::with_capacity(2 * m);
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e > 0 {
                    arrows.push(3 * i + 2);
                } else {
                    arrows.extend([3 * i, 3 * i + 1]);
                }
            }
            r.add_term(Path::from_arrows(&quiver, arrows)?, c.clone());
        }
        relations.push(r);
    }
    let mast_arrows: Vec<usize> = (0..m).flat_map(|i| [3 * i, 3 * i + 1]).collect();
    let mast = Mast::new(&quiver, Path::from_arrows(&quiver, mast_arrows)?);
    let (presentation, _) = Presentation::new(field, quiver, relations)?;
    Ok(Realization {
        system,
        presentation,
        mast,
    })
}

/// Recomputes the variety of the constructed mast and compares its ideal
/// with the multilinear system.
pub fn verify_realization(r: &Realization) -> Result<bool> {
    let variety = variety_generators(&r.presentation, &r.mast)?;
    let table = &variety.table;
    let m = r.system.nvars();
    if table.nvars() != m || table.detours().len() != m {
        return Ok(false);
    }
    for (i, d) in table.detours().iter().enumerate() {
        if d.arrow != 3 * i + 2 || d.prefix != 2 * i || d.targets != [2 * i + 2] {
            return Ok(false);
        }
    }
    let expected = IdealBasis::new(r.system.field, m, r.system.polynomials.clone())?;
    ideal_equal(&variety.ideal, &expected)
}
