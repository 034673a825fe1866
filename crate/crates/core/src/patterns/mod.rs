//! Containment searches, constellations, jaggedness and Ramsey-type checks.

mod cliques;
mod constellation;
mod containment;
mod jagged;
mod ramsey;

pub use cliques::{clique_number, clique_number_with_limit, max_stable_set, max_stable_set_with_limit, SetWitness, CLIQUE_LIMIT};
pub use constellation::{
    find_ample_constellation, find_constellation, is_d_ample, is_induced_path, shortest_linking_length, Constellation,
    CONSTELLATION_HOST_LIMIT,
};
pub use containment::*;
pub use jagged::{check_jagged, JaggedFailure, JAGGED_LIMIT};
pub use ramsey::{
    ehkss_check, has_clique_of_size, has_induced_kss, has_kss_subgraph, monochromatic_search, ramsey_stable_set_check,
    random_restricted_graph, MonochromaticMode, MonochromaticWitness, StatementCheck, MONOCHROMATIC_LIMIT,
    STATEMENT_HOST_LIMIT,
};

#[allow(unused_imports)]
pub(crate) use cliques::{has_clique, max_clique_in};
#[allow(unused_imports)]
pub(crate) use constellation::induced_paths_in;
