//! Exact q-series, discriminant forms, Weil representations and lift
//! bookkeeping for meromorphic modular forms on `U + U + O_K`.

pub mod cli;
pub mod cyclotomic;
pub mod fixtures;
pub mod lattice;
pub mod lifts;
pub mod qseries;
pub mod report;
pub mod weilrep;
