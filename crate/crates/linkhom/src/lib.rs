//! Exact computation of quantum link invariants and their categorifications
//! from braid words.
//!
//! Everything is computed over exact rational arithmetic — no floating point,
//! no Gröbner bases, no randomization in the mathematical core:
//!
//! * the Jones polynomial, through the Kauffman bracket state sum,
//! * the HOMFLY-PT polynomial, through Hecke algebras and the Ocneanu trace,
//! * Reshetikhin–Turaev invariants of the quantum general linear algebra,
//!   through exact matrix representations on tensor products of exterior
//!   powers of the vector representation (webs and ladders),
//! * coloured Jones polynomials, through cabling with Jones–Wenzl projectors,
//! * bigraded Khovanov homology, through the cube of resolutions,
//! * triply graded link homology, through Rouquier complexes of Soergel
//!   bimodules and their Hochschild homology.
//!
//! All invariants take braid words as input (`"3: 1 -2 1 -2"` denotes a braid
//! on 3 strands; letters are signed generator indices) and are invariants of
//! the closure of the braid. A consistency harness cross-checks the
//! decategorified shadows of the homology theories against the polynomial
//! invariants on a fixed corpus of small links.

pub mod algebra;
pub mod braid;
pub mod hecke;
pub mod kauffman;
pub mod khovanov;
pub mod qrep;
pub mod soergel;
pub mod webrt;

/// Small pinned corpus of braid words used by the consistency harness and
/// the integration tests: unknots, unlinks, Hopf links, trefoils, the figure
/// eight, the (2,4) and (3,3)-ish torus examples, and a connected sum.
pub const CORPUS: [&str; 12] = [
    "1:",
    "2:",
    "2: 1",
    "2: -1",
    "2: 1 1",
    "2: -1 -1",
    "2: 1 -1",
    "2: 1 1 1",
    "3: 1 2",
    "3: 1 -2 1 -2",
    "3: 1 2 1 2",
    "2: 1 1 1 1 1",
];
