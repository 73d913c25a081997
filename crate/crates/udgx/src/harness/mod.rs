//! Instance generation, file I/O, exhaustive oracles, and randomized
//! cross-verification.

pub mod gen;
pub mod io;
pub mod oracle;
pub mod verify;
