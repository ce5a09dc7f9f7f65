//! Workbench for the three families of maximal non-separating planar
//! graphs (wheels, elongated triangular prisms, maximal outerplanar
//! graphs), constructive complete-minor certificates inside their
//! complements, and an independent exact minor-search engine used to
//! cross-check every certificate.

pub mod canon;
pub mod certificates;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod search;

pub use canon::{canonical_code, canonical_code_capped, CanonicalCode, DEFAULT_CANON_CAP};
pub use error::{Error, Result};
pub use families::{ChordClass, Dichotomy, FamilySpec, Mop};
pub use graph::{from_json, to_json, Graph, MAX_ORDER};
pub use graph6::{decode_graph6, encode_graph6, MAX_GRAPH6_ORDER};

