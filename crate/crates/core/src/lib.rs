//! Exact verification engine for minimal representations, oscillator
//! realizations of `sp(2n,R)`, `u(n,n)` and `so*(4n)`, reductive dual pairs,
//! and the bilocal-field commutator algebra of free massless fields.
//!
//! All arithmetic is exact (`Q`, `Q(i)`, or `Q(i)[sqrt 2]`); nothing in this
//! crate uses floating point. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod bilocal;
pub mod field;
pub mod fockspace;
pub mod harmonics;
pub mod linalg;
pub mod massless;
pub mod oscrep;
pub mod poly;
pub mod report;
pub mod rootsys;
pub mod weylalg;
