//! Uniserial representations of finite dimensional path algebras with
//! relations: detours and routes on a mast, the affine variety of uniserial
//! modules with that mast, explicit modules, isomorphism testing, transport
//! between masts, and realization of arbitrary varieties.

pub mod detour;
pub mod dsl;
pub mod error;
pub mod field;
pub mod groebner;
pub mod iso;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod quiver;
pub mod realize;
pub mod rewrite;
pub mod transport;
pub mod variety;

pub use detour::{enumerate_detours, enumerate_masts, is_route, Detour, DetourTable, Mast};
pub use dsl::{parse_presentation, parse_presentation_with_report, print_presentation};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::{groebner_basis, ideal_contains, ideal_equal, is_unit_ideal, IdealBasis};
pub use iso::{
    decide_iso, is_homomorphism, iso_system, isomorphism_matrix, IsoDecision, IsoEquation,
    IsoSystem,
};
pub use linalg::{solve_linear, LinearSolution, LinearSystem, Matrix};
pub use module::{
    build_module, layered_graph, layered_graph_with_top, GraphEdge, LayeredGraph, UniserialModule,
};
pub use poly::{Monomial, MonomialOrder, Polynomial};
pub use quiver::{AlgebraElement, Arrow, Path, Presentation, Quiver};
pub use realize::{
    multilinearize, realize_variety, verify_realization, Multilinear, Realization,
    RealizationInput, VariableOrigin,
};
pub use rewrite::{normal_form, normal_form_terms, specialized_normal_form, SymbolicElement};
pub use transport::{detour_bijection, same_vertex_sequence, transport_mast, Transport};
pub use variety::{
    is_nonempty_variety, point_on_variety, variety_generators, variety_generators_with,
    GeneratorOptions, UniserialVariety,
};
