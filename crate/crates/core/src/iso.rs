//! The isomorphism system of a mast and the isomorphism decision.

use std::fmt::Write as _;

use crate::detour::DetourTable;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{solve_linear, LinearSystem, Matrix};
use crate::module::UniserialModule;
use crate::poly::Polynomial;
use crate::quiver::{Path, Presentation};
use crate::rewrite::{normal_form_terms, Symbolic};
use crate::variety::UniserialVariety;

/// One equation `lhs = rhs`, the coefficient of the target prefix `target`
/// in the expansion for detour number `detour`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoEquation {
    pub detour: usize,
    pub target: usize,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

/// Equations in `X[1..N]`, `Y[1..N]`, `Z[1..t]`, stored as ring variables
/// `0..N`, `N..2N`, `2N..2N+t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoSystem {
    pub field: Field,
    pub n: usize,
    /// Lengths of the positive-length prefixes ending at the start vertex.
    pub cycles: Vec<usize>,
    pub equations: Vec<IsoEquation>,
}

impl IsoSystem {
    pub fn t(&self) -> usize {
        self.cycles.len()
    }

    pub fn ring_nvars(&self) -> usize {
        2 * self.n + self.t()
    }

    pub fn x(&self, i: usize) -> usize {
        i
    }

    pub fn y(&self, i: usize) -> usize {
        self.n + i
    }

    pub fn z(&self, j: usize) -> usize {
        2 * self.n + j
    }

    pub fn variable_name(&self, v: usize) -> String {
        if v < self.n {
            format!("X[{}]", v + 1)
        } else if v < 2 * self.n {
            format!("Y[{}]", v - self.n + 1)
        } else {
            format!("Z[{}]", v - 2 * self.n + 1)
        }
    }

    pub fn render(&self, table: &DetourTable, quiver: &crate::quiver::Quiver) -> String {
        let mast = table.mast();
        let mut out = String::new();
        let cycles: Vec<String> = self
            .cycles
            .iter()
            .map(|&w| mast.prefix(w).display(quiver))
            .collect();
        let _ = writeln!(
            out,
            "cycles at the start vertex (t = {}): {}",
            self.t(),
            cycles.join(", ")
        );
        let name = |v: usize| self.variable_name(v);
        for (k, eq) in self.equations.iter().enumerate() {
            let d = &table.detours()[eq.detour];
            let _ = writeln!(
                out,
                "({}) {} = {}    # ({}, {}) at {}",
                k + 1,
                eq.lhs.display_with(&name),
                eq.rhs.display_with(&name),
                quiver.arrow(d.arrow).name,
                mast.prefix(d.prefix).display(quiver),
                mast.prefix(eq.target).display(quiver)
            );
        }
        out
    }
}

/// Expands `sum_i X_i v_i z = alpha u z` with `z = e(1) + sum_j Z_j w_j`
/// for every detour, substituting with the `Y` variables.
pub fn iso_system(pres: &Presentation, table: &DetourTable) -> Result<IsoSystem> {
    let quiver = &pres.quiver;
    let field = pres.field;
    let mast = table.mast();
    let n = table.nvars();
    let cycles: Vec<usize> = (1..=mast.len())
        .filter(|&j| mast.vertex(j) == mast.vertex(0))
        .collect();
    let total = 2 * n + cycles.len();
    let scalars = Symbolic {
        field,
        nvars: total,
        offset: n,
    };
    let var = |v: usize| Polynomial::var(field, total, v);
    let mut z_terms: Vec<(Path, Polynomial)> =
        vec![(mast.prefix(0), Polynomial::one(field, total))];
    for (j, &w) in cycles.iter().enumerate() {
        z_terms.push((mast.prefix(w), var(2 * n + j)));
    }
    let times_z = |head: &Path, coef: &Polynomial| -> Result<Vec<(Path, Polynomial)>> {
        z_terms
            .iter()
            .map(|(w, c)| {
                let p = Path::compose(quiver, head, w)
                    .ok_or_else(|| Error::Invariant("cycle does not compose".into()))?;
                Ok((p, coef * c))
            })
            .collect()
    };

    let mut equations = Vec::new();
    for (k, d) in table.detours().iter().enumerate() {
        let mut lhs_terms = Vec::new();
        for (i, &t) in d.targets.iter().enumerate() {
            lhs_terms.extend(times_z(&mast.prefix(t), &var(d.first_var + i))?);
        }
        let alpha_u = Path::compose(
            quiver,
            &Path::from_arrows(quiver, vec![d.arrow])?,
            &mast.prefix(d.prefix),
        )
        .ok_or_else(|| Error::Invariant("detour does not compose".into()))?;
        let rhs_terms = times_z(&alpha_u, &Polynomial::one(field, total))?;
        let lhs = normal_form_terms(quiver, table, lhs_terms, &scalars)?;
        let rhs = normal_form_terms(quiver, table, rhs_terms, &scalars)?;
        for j in 0..=mast.len() {
            if !d.targets.contains(&j) && (!lhs[j].is_zero() || !rhs[j].is_zero()) {
                return Err(Error::Invariant(format!(
                    "expansion leaves the target span at prefix {j}"
                )));
            }
        }
        for &t in &d.targets {
            for side in [&lhs[t], &rhs[t]] {
                if (0..cycles.len()).any(|j| side.degree_in(2 * n + j) > 1)
                    || side
                        .terms()
                        .any(|(m, _)| m.exponents()[2 * n..].iter().sum::<u32>() > 1)
                {
                    return Err(Error::Invariant("equation is not linear in Z".into()));
                }
            }
            equations.push(IsoEquation {
                detour: k,
                target: t,
                lhs: lhs[t].clone(),
                rhs: rhs[t].clone(),
            });
        }
    }
    Ok(IsoSystem {
        field,
        n,
        cycles,
        equations,
    })
}

impl IsoSystem {
    /// The linear system in `Z` obtained by setting `X = k`, `Y = k2`.
    pub fn specialize(&self, k: &[FieldElement], k2: &[FieldElement]) -> Result<LinearSystem> {
        for p in [k, k2] {
            if p.len() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: p.len(),
                });
            }
        }
        let t = self.t();
        let mut matrix = Matrix::zeros(self.field, self.equations.len(), t);
        let mut rhs = Vec::with_capacity(self.equations.len());
        for (row, eq) in self.equations.iter().enumerate() {
            let diff = &eq.lhs - &eq.rhs;
            let mut constant = self.field.zero();
            let mut coeffs = vec![self.field.zero(); t];
            for (m, c) in diff.terms() {
                let e = m.exponents();
                let mut value = c.clone();
                for i in 0..self.n {
                    if e[i] > 0 {
                        value = &value * &k[i].pow(e[i]);
                    }
                    if e[self.n + i] > 0 {
                        value = &value * &k2[i].pow(e[self.n + i]);
                    }
                }
                match (0..t).find(|&j| e[2 * self.n + j] > 0) {
                    Some(j) => coeffs[j] = &coeffs[j] + &value,
                    None => constant = &constant + &value,
                }
            }
            for (j, c) in coeffs.into_iter().enumerate() {
                matrix.set(row, j, c);
            }
            rhs.push(-&constant);
        }
        LinearSystem::new(matrix, rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoDecision {
    pub isomorphic: bool,
    /// Values `c_1, ..., c_t` with free variables set to zero; the
    /// isomorphism sends `x` to `y + sum_j c_j w_j y`.
    pub witness: Option<Vec<FieldElement>>,
}

/// Decides whether the modules of two points on the variety are isomorphic.
pub fn decide_iso(
    variety: &UniserialVariety,
    sys: &IsoSystem,
    k: &[FieldElement],
    k2: &[FieldElement],
) -> Result<IsoDecision> {
    if !variety.contains(k)? || !variety.contains(k2)? {
        return Err(Error::PointNotOnVariety);
    }
    let linear = sys.specialize(k, k2)?;
    let sol = solve_linear(&linear)?;
    Ok(IsoDecision {
        isomorphic: sol.consistent,
        witness: sol.particular,
    })
}

/// Matrix of the map `b_j -> prefix_j * (y + sum_j c_j w_j y)` from the
/// module of `k` to the module of `k2`.
pub fn isomorphism_matrix(
    sys: &IsoSystem,
    target: &UniserialModule,
    witness: &[FieldElement],
) -> Matrix {
    let n = target.dim();
    let field = target.field();
    let mut image = vec![field.zero(); n];
    image[0] = field.one();
    for (j, &w) in sys.cycles.iter().enumerate() {
        image[w] = &image[w] + &witness[j];
    }
    let mast = target.mast();
    let columns: Vec<Vec<FieldElement>> = (0..n)
        .map(|j| target.path_matrix(&mast.prefix(j)).mul_vec(&image))
        .collect();
    Matrix::from_columns(field, n, &columns)
}

/// True if `f` intertwines the arrow actions of `source` and `target`.
pub fn is_homomorphism(f: &Matrix, source: &UniserialModule, target: &UniserialModule) -> bool {
    source
        .matrices()
        .iter()
        .zip(target.matrices())
        .all(|(a, b)| b.mul(f) == f.mul(a))
}
