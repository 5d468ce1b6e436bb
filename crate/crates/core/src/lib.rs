//! Exact computation of Lusztig's q-analog of Kostant's weight multiplicity
//! formula for a standard parabolic `P = P_Π`, the graded Euler character of
//! `E_μ^*` on the flag manifold `G/P`, and the Hilbert series of the degree
//! filtration on nearly holomorphic sections.
//!
//! Every quantity is an exact integer or an integer polynomial in `q`. The
//! graded Euler character is computed along two independent routes (the
//! alternating Weyl sum of Lusztig polynomials, and a direct Borel–Weil–Bott
//! evaluation of the partition-function expansion) which must agree.
//!
//! ```
//! use qkostant::{RootSystem, Series, Weight, ParabolicSubset, lusztig_poly};
//!
//! let a2 = RootSystem::new(Series::A, 2).unwrap();
//! let borel = ParabolicSubset::borel(&a2);
//! let m = lusztig_poly(&a2, &borel, &Weight::new(vec![1, 1]), &Weight::zero(2)).unwrap();
//! assert_eq!(m.to_string(), "q + q^2");
//! ```

pub mod characters;
pub mod cli;
pub mod error;
pub mod hilbert;
pub mod lusztig;
pub mod parabolic;
pub mod partition;
pub mod poly;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use characters::{
    bwb_euler, dual_highest_weight, freudenthal, weyl_dimension, SignedWeight, WeightCharacter,
};
pub use error::{Error, Result};
pub use hilbert::{
    dimension_series, graded_euler_direct, graded_euler_lusztig, hilbert_series, GradedCharacter,
    HilbertEngine, HilbertReport, PathCheck,
};
pub use lusztig::{lusztig_poly, LusztigEngine};
pub use parabolic::{
    is_hermitian_symmetric, is_p_dominant, nilradical_roots, two_rho_p, vanishing_case,
    ParabolicSubset, VanishingCase,
};
pub use partition::{partition_q, weights_of_degree, PartitionFunction, PartitionValue};
pub use poly::QPolynomial;
pub use rootsys::{pairing, rho, to_root_basis, CartanType, RootSystem, RootVector, Series, Weight};
pub use weyl::{
    act, enumerate_weyl, sign, to_dominant_chamber, weyl_order, ChamberResult, WeylElement,
    WeylGroup, DEFAULT_WEYL_CAP,
};
