//! Quivers with relations and the finite-dimensional algebras they present.

mod algebra;
mod groebner;
mod iso;
mod quiver;

pub use algebra::{
    build_algebra, opposite_algebra, quiver_presentation_of, tensor_algebra, AbstractAlgebra, Algebra, Normalized,
    Origin, SparseVec,
};
pub use groebner::{GroebnerBasis, Poly, Word};
pub use iso::{find_arrow_map, induced_matrix, is_arrow_map, path_image, presentations_equivalent, scalar_combination};
pub use quiver::{
    Arrow, ArrowJson, FieldJson, Presentation, PresentationJson, Quiver, Relation, TermJson, DEFAULT_MAX_PATH_LENGTH,
};
