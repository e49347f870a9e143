//! Defining polynomials of the variety of uniserial modules with a given mast.

use crate::detour::{enumerate_detours, is_route, DetourTable, Mast};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{is_unit_ideal, IdealBasis};
use crate::poly::MonomialOrder;
use crate::quiver::Presentation;
use crate::rewrite::normal_form;

/// Controls which right multiples `g*w` of the relations are normal-formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorOptions {
    /// Allow `length(w) <= l + extra_length`.
    pub extra_length: usize,
    /// Skip multipliers `w` that are not routes (their products vanish).
    pub prune_non_routes: bool,
}

impl Default for GeneratorOptions {
    fn default() -> Self {
        GeneratorOptions {
            extra_length: 0,
            prune_non_routes: true,
        }
    }
}

/// The detour table of a mast and generators of the ideal of its variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniserialVariety {
    pub table: DetourTable,
    pub ideal: IdealBasis,
}

impl UniserialVariety {
    pub fn mast(&self) -> &Mast {
        self.table.mast()
    }

    pub fn nvars(&self) -> usize {
        self.table.nvars()
    }

    pub fn contains(&self, point: &[FieldElement]) -> Result<bool> {
        point_on_variety(&self.ideal, point)
    }
}

pub fn variety_generators(pres: &Presentation, mast: &Mast) -> Result<UniserialVariety> {
    variety_generators_with(pres, mast, GeneratorOptions::default())
}

pub fn variety_generators_with(
    pres: &Presentation,
    mast: &Mast,
    opts: GeneratorOptions,
) -> Result<UniserialVariety> {
    let quiver = &pres.quiver;
    let table = enumerate_detours(quiver, mast);
    let start = mast.vertex(0);
    let cap = mast.len() + opts.extra_length;
    let multipliers: Vec<_> = quiver
        .paths_from(start, cap)
        .into_iter()
        .filter(|w| !opts.prune_non_routes || is_route(quiver, w, mast))
        .collect();
    let mut gens = Vec::new();
    let mut seen = Vec::new();
    for g in &pres.relations {
        let Some((source, _)) = g.endpoints(quiver) else {
            return Err(Error::Invariant("relation is not uniform".into()));
        };
        for w in multipliers.iter().filter(|w| w.target(quiver) == source) {
            let nf = normal_form(quiver, &table, &g.mul_right(quiver, w))?;
            for (_, tau) in nf.nonzero() {
                let key = tau.monic(MonomialOrder::GrevLex);
                if !seen.contains(&key) {
                    seen.push(key);
                    gens.push(tau.clone());
                }
            }
        }
    }
    let ideal = IdealBasis::new(pres.field, table.nvars(), gens)?;
    Ok(UniserialVariety { table, ideal })
}

pub fn is_nonempty_variety(pres: &Presentation, mast: &Mast) -> Result<bool> {
    Ok(!is_unit_ideal(&variety_generators(pres, mast)?.ideal))
}

/// True if every generator vanishes at `point`.
pub fn point_on_variety(ideal: &IdealBasis, point: &[FieldElement]) -> Result<bool> {
    if point.len() != ideal.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ideal.nvars(),
            found: point.len(),
        });
    }
    for g in ideal.generators() {
        if !g.evaluate(point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
