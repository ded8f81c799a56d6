//! File formats and report helpers behind the `subpow` binary: the
//! edge-list text format for base digraphs, DOT/JSON/CSV/table
//! rendering of subset power graphs and cycle spectra, and spectrum
//! comparison for verification sweeps.

#![forbid(unsafe_code)]

pub mod edge_list;
pub mod export;
pub mod report;
