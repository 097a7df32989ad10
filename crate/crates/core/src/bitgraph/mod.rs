//! Bit-packed simple graphs on at most 16 nodes, with local complementation,
//! canonical labeling, class enumeration, graph6 I/O, and spectral tools.

mod canon;
mod classes;
mod globus;
mod graph;
mod spectral;

pub use canon::{canonical_form, orbit_size, CanonicalForm, MAX_CANON_NODES};
pub use classes::{
    classes_to_text, enumerate_classes, isomorphism_classes, lc_orbit, GraphClass, Relation,
    MAX_ENUMERATION_NODES,
};
pub use globus::{globus_split, Fragment};
pub use graph::{Graph, MAX_NODES};
pub use spectral::{
    cut_size, fiedler_pair, fiedler_vector, laplacian, spectral_bisection, symmetric_eigen,
    Bisection,
};
