//! Orientably-regular embeddings of complete multigraphs.

pub mod ffield;
pub mod fplinalg;
pub mod grp;
pub mod cosetenum;
pub mod construct;
pub mod oracle;
pub mod mapcore;
pub mod crosscheck;
pub mod atlas;
