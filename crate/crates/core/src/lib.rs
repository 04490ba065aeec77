//! Exact q-series machinery for representation numbers of the diagonal
//! octonary quadratic forms with coefficients 1, 2, 3 and 6.

pub mod characters;
pub mod cli;
pub mod etaq;
pub mod formspace;
pub mod linalg;
pub mod oracle;
pub mod series;
pub mod solver;
pub mod theta;
pub mod verify;
