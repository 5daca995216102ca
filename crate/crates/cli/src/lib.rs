//! File formats and command-line front-end for [`bmsym_core`].
//!
//! All JSON is emitted compactly with keys in a fixed order; rationals are
//! lowest-terms strings (`"3"`, `"-1/6"`) and floats use the shortest
//! representation that round-trips. Indices are 1-based.

pub mod cli;
pub mod json;
