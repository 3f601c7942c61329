//! File formats, parallel drivers and the claim registry for `ew-core`.

pub mod io;
pub mod parallel;
pub mod report;
pub mod reproduce;
pub mod slice_csv;
