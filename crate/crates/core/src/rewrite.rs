//! Normal forms under the substitution rules of a mast: non-routes vanish,
//! and `alpha*u` rewrites to the sum of its variables times the target
//! prefixes of the detour `(alpha, u)`.

use std::collections::BTreeMap;

use crate::detour::{is_route, DetourTable};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Polynomial;
use crate::quiver::{AlgebraElement, Path, Quiver};

/// Coefficient domain for rewriting.
pub trait Scalars {
    type Value: Clone;
    fn zero(&self) -> Self::Value;
    fn constant(&self, c: &FieldElement) -> Self::Value;
    fn is_zero(&self, v: &Self::Value) -> bool;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// `v` times the detour variable with 0-based index `var`.
    fn times_var(&self, v: &Self::Value, var: usize) -> Self::Value;
}

/// Polynomial coefficients; detour variable `i` is ring variable `offset + i`.
#[derive(Debug, Clone, Copy)]
pub struct Symbolic {
    pub field: Field,
    pub nvars: usize,
    pub offset: usize,
}

impl Scalars for Symbolic {
    type Value = Polynomial;

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, self.nvars)
    }

    fn constant(&self, c: &FieldElement) -> Polynomial {
        Polynomial::constant(c.clone(), self.nvars)
    }

    fn is_zero(&self, v: &Polynomial) -> bool {
        v.is_zero()
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }

    fn times_var(&self, v: &Polynomial, var: usize) -> Polynomial {
        v * &Polynomial::var(self.field, self.nvars, self.offset + var)
    }
}

/// Field coefficients with every variable evaluated at a point.
#[derive(Debug, Clone, Copy)]
pub struct Specialized<'a> {
    pub field: Field,
    pub point: &'a [FieldElement],
}

impl Scalars for Specialized<'_> {
    type Value = FieldElement;

    fn zero(&self) -> FieldElement {
        self.field.zero()
    }

    fn constant(&self, c: &FieldElement) -> FieldElement {
        c.clone()
    }

    fn is_zero(&self, v: &FieldElement) -> bool {
        v.is_zero()
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a + b
    }

    fn times_var(&self, v: &FieldElement, var: usize) -> FieldElement {
        v * &self.point[var]
    }
}

/// Coefficients of the prefixes `p_0, ..., p_l` of the mast.
pub fn normal_form_terms<S: Scalars>(
    quiver: &Quiver,
    table: &DetourTable,
    terms: Vec<(Path, S::Value)>,
    scalars: &S,
) -> Result<Vec<S::Value>> {
    let mast = table.mast();
    let l = mast.len();
    let max_len = terms.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
    let mut result = vec![scalars.zero(); l + 1];
    let mut current: BTreeMap<Path, S::Value> = BTreeMap::new();
    for (p, c) in terms {
        accumulate(&mut current, p, c, scalars);
    }
    for _ in 0..=max_len {
        if current.is_empty() {
            return Ok(result);
        }
        let mut next: BTreeMap<Path, S::Value> = BTreeMap::new();
        for (q, c) in current {
            if scalars.is_zero(&c) || !is_route(quiver, &q, mast) {
                continue;
            }
            if let Some(j) = mast.prefix_length(&q) {
                result[j] = scalars.add(&result[j], &c);
                continue;
            }
            let j = common_prefix(&q, mast.path().arrows());
            let alpha = q.arrows()[j];
            let detour = table.find(alpha, j).ok_or_else(|| {
                Error::Invariant(format!(
                    "route `{}` has no detour decomposition",
                    q.display(quiver)
                ))
            })?;
            let tail = &q.arrows()[j + 1..];
            for (i, &t) in detour.targets.iter().enumerate() {
                let mut arrows = mast.path().arrows()[..t].to_vec();
                arrows.extend_from_slice(tail);
                let path = Path::from_parts(q.source(), arrows);
                accumulate(
                    &mut next,
                    path,
                    scalars.times_var(&c, detour.first_var + i),
                    scalars,
                );
            }
        }
        current = next;
    }
    if current.values().all(|c| scalars.is_zero(c)) {
        Ok(result)
    } else {
        Err(Error::Invariant(format!(
            "rewriting did not terminate within {} passes",
            max_len + 1
        )))
    }
}

fn accumulate<S: Scalars>(map: &mut BTreeMap<Path, S::Value>, p: Path, c: S::Value, scalars: &S) {
    if scalars.is_zero(&c) {
        return;
    }
    match map.get_mut(&p) {
        Some(v) => {
            *v = scalars.add(v, &c);
            if scalars.is_zero(v) {
                map.remove(&p);
            }
        }
        None => {
            map.insert(p, c);
        }
    }
}

fn common_prefix(q: &Path, p: &[usize]) -> usize {
    q.arrows().iter().zip(p).take_while(|(a, b)| a == b).count()
}

/// Symbolic normal form: one polynomial per prefix of the mast.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicElement {
    pub coefficients: Vec<Polynomial>,
}

impl SymbolicElement {
    /// Nonzero coefficients with their prefix lengths.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Polynomial::is_zero)
    }

    pub fn display(&self, quiver: &Quiver, table: &DetourTable) -> String {
        let parts: Vec<String> = self
            .nonzero()
            .map(|(j, c)| format!("({c})*{}", table.mast().prefix(j).display(quiver)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Normal form with polynomial coefficients in the table's variables.
pub fn normal_form(
    quiver: &Quiver,
    table: &DetourTable,
    z: &AlgebraElement,
) -> Result<SymbolicElement> {
    let scalars = Symbolic {
        field: z.field(),
        nvars: table.nvars(),
        offset: 0,
    };
    let terms = z
        .terms()
        .map(|(p, c)| (p.clone(), scalars.constant(c)))
        .collect();
    Ok(SymbolicElement {
        coefficients: normal_form_terms(quiver, table, terms, &scalars)?,
    })
}

/// Normal form with the variables evaluated at `point`.
pub fn specialized_normal_form(
    quiver: &Quiver,
    table: &DetourTable,
    z: &AlgebraElement,
    point: &[FieldElement],
) -> Result<Vec<FieldElement>> {
    if point.len() != table.nvars() {
        return Err(Error::DimensionMismatch {
            expected: table.nvars(),
            found: point.len(),
        });
    }
    let scalars = Specialized {
        field: z.field(),
        point,
    };
    let terms = z.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    normal_form_terms(quiver, table, terms, &scalars)
}
