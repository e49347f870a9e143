//! Ideal bases and Buchberger's algorithm.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// A finite generating set of a polynomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    field: Field,
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    groebner: bool,
}

impl IdealBasis {
    pub fn new(field: Field, nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            if g.field() != field {
                return Err(Error::InvalidField(format!(
                    "generator over {} in an ideal over {field}",
                    g.field()
                )));
            }
        }
        Ok(IdealBasis {
            field,
            nvars,
            order: MonomialOrder::GrevLex,
            generators,
            groebner: false,
        })
    }

    pub fn zero_ideal(field: Field, nvars: usize) -> Self {
        IdealBasis {
            field,
            nvars,
            order: MonomialOrder::GrevLex,
            generators: Vec::new(),
            groebner: true,
        }
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if order != self.order {
            self.groebner = false;
        }
        self.order = order;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_groebner(&self) -> bool {
        self.groebner
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True if the ideal is the zero ideal as generated (no nonzero generator).
    pub fn is_zero_ideal(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }
}

/// Remainder of `f` on division by `basis` under `order`.
pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, _)> = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let divisors: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.field(), f.nvars());
    while let Some((m, c)) = p.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (lm, lc))| lm.quotient_of(&m).map(|q| (i, q, lc)));
        match hit {
            Some((i, q, lc)) => {
                let factor = c.try_div(lc).expect("nonzero leading coefficient");
                p = &p - &divisors[i].mul_term(&factor, &q);
            }
            None => {
                rem.add_term(m.clone(), c.clone());
                p.add_term(m, -&c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading(order).expect("nonzero");
    let (gm, gc) = g.leading(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(
        &fc.inverse().expect("nonzero"),
        &fm.quotient_of(&l).expect("divides"),
    );
    let b = g.mul_term(
        &gc.inverse().expect("nonzero"),
        &gm.quotient_of(&l).expect("divides"),
    );
    &a - &b
}

/// Reduced Gröbner basis: monic, sorted by ascending leading monomial.
pub fn groebner_basis(ideal: &IdealBasis) -> IdealBasis {
    let order = ideal.order;
    let field = ideal.field;
    let nvars = ideal.nvars;
    let unit = || IdealBasis {
        field,
        nvars,
        order,
        generators: vec![Polynomial::one(field, nvars)],
        groebner: true,
    };

    let mut g: Vec<Polynomial> = Vec::new();
    for f in &ideal.generators {
        let r = reduce(f, &g, order);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return unit();
        }
        g.push(r.monic(order));
    }
    let lead = |p: &Polynomial| p.leading(order).expect("nonzero").0.clone();
    let mut leads: Vec<Monomial> = g.iter().map(lead).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| {
                let la = leads[a.1 .0].lcm(&leads[a.1 .1]);
                let lb = leads[b.1 .0].lcm(&leads[b.1 .1]);
                order.cmp(&la, &lb)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pos);
        if leads[i].coprime(&leads[j]) {
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&g[i], &g[j], order), &g, order);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return unit();
        }
        let r = r.monic(order);
        let n = g.len();
        leads.push(lead(&r));
        g.push(r);
        for k in 0..n {
            pairs.push((k, n));
        }
    }

    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, p) in g.iter().enumerate() {
        let lm = &leads[idx];
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(k, other)| k != idx && other.divides(lm) && (other != lm || k < idx));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, p)| p.clone())
            .collect();
        let p = &minimal[idx];
        let (lm, lc) = p.leading(order).expect("nonzero");
        let tail = {
            let mut t = p.clone();
            t.add_term(lm.clone(), -lc);
            t
        };
        let mut r = reduce(&tail, &others, order);
        r.add_term(lm.clone(), lc.clone());
        reduced.push(r.monic(order));
    }
    reduced.sort_by(|a, b| order.cmp(&lead(a), &lead(b)));
    IdealBasis {
        field,
        nvars,
        order,
        generators: reduced,
        groebner: true,
    }
}

fn ensure_groebner(ideal: &IdealBasis) -> IdealBasis {
    if ideal.groebner {
        ideal.clone()
    } else {
        groebner_basis(ideal)
    }
}

pub fn is_unit_ideal(ideal: &IdealBasis) -> bool {
    ensure_groebner(ideal)
        .generators
        .iter()
        .any(|g| !g.is_zero() && g.is_constant())
}

/// Ideal membership of `f`.
pub fn ideal_contains(ideal: &IdealBasis, f: &Polynomial) -> Result<bool> {
    if f.nvars() != ideal.nvars {
        return Err(Error::DimensionMismatch {
            expected: ideal.nvars,
            found: f.nvars(),
        });
    }
    let gb = ensure_groebner(ideal);
    Ok(reduce(f, &gb.generators, gb.order).is_zero())
}

/// Equality of the generated ideals.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis) -> Result<bool> {
    if a.nvars != b.nvars {
        return Err(Error::DimensionMismatch {
            expected: a.nvars,
            found: b.nvars,
        });
    }
    let order = a.order;
    let normalize = |ideal: &IdealBasis| -> Vec<Polynomial> {
        ideal
            .generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.monic(order))
            .collect()
    };
    let (na, nb) = (normalize(a), normalize(b));
    if na.iter().all(|g| nb.contains(g)) && nb.iter().all(|g| na.contains(g)) {
        return Ok(true);
    }
    let ga = groebner_basis(&a.clone().with_order(order));
    let gb = groebner_basis(&b.clone().with_order(order));
    Ok(na
        .iter()
        .all(|g| reduce(g, &gb.generators, order).is_zero())
        && nb
            .iter()
            .all(|g| reduce(g, &ga.generators, order).is_zero()))
}
