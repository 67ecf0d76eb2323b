//! Cycling, decycling, cyclic sliding and summit sets.

mod cycling;
mod summit;

pub use cycling::{
    cycle, cyclic_sliding, decycle, final_factor, initial_factor, is_rigid, preferred_prefix,
    send_to_sc, send_to_sc_nf, send_to_sss, send_to_sss_nf, send_to_uss, send_to_uss_nf,
    sss_iteration_cap, ConjugacyWitness, DEFAULT_ORBIT_CAP,
};
pub use summit::{
    compute_summit_graph, compute_summit_graph_with, conjugacy_decide, conjugacy_search,
    conjugacy_search_with, minimal_conjugators, send_to, ConjugatorStrategy, SummitEdge,
    SummitGraph, SummitKind, SummitOptions, SummitSet,
};
