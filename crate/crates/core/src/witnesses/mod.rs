//! Positive maps built from qutrit MUBs, their Choi witnesses, mirrored partners and
//! the tabulated catalog of witnesses and states.

mod catalog;
mod channels;
mod circulant;
mod mirror;

pub use catalog::{
    c_d3, c_tilde_d3, catalog, catalog_names, flip, local_unitary_u, reduction_witness, w_d3, w_tilde_d3, CatalogEntry,
    EntryStatus,
};
pub use channels::{choi, complementary_splits, dephase, phi_gamma_apply, witness_gamma, GammaSplit};
pub use circulant::{circulant_witness, table1, table1_lookup, CirculantParams};
pub use mirror::{find_mirror_mu, find_mirror_mu_with, mirror_partner, MirrorResult};
