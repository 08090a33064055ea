//! Exact symbolic computation in the algebra of `n x n` quantum matrices:
//! normal forms, quantum minors, quantum powers of the generic matrix and
//! residual checks of the identities relating their traces.
//!
//! ```
//! use qtrace::{QAlgebra, Session};
//!
//! let alg = QAlgebra::new(2).unwrap();
//! let x11 = alg.gen(1, 1).unwrap();
//! let x22 = alg.gen(2, 2).unwrap();
//! let c = alg.commutator(&x11, &x22).unwrap();
//! assert_eq!(c.to_string(), "(1*q + -1*q^-1)*x[1,2]*x[2,1]");
//!
//! let s = Session::new(2).unwrap();
//! assert!(s.commutator_residual(1, 2).unwrap().is_zero());
//! ```

pub mod algebra;
pub mod coeff;
pub mod error;
pub mod exprio;
pub mod identities;
pub mod minors;
pub mod par;
pub mod poisson;
pub mod qmatrix;
pub mod verify;

pub use algebra::{
    alg_commutator, alg_mul, alg_specialize, reduce_word, theta, Algebra, AlgebraElement, Element,
    Gen, Monomial, NumericAlgebra, NumericElement, QAlgebra, Strategy,
};
pub use coeff::{
    lp_add, lp_derivative_at_one, lp_eval, lp_mul, rat, ratio, LaurentPoly, Rational, Scalar,
};
pub use error::{Error, Result};
pub use exprio::{parse, parse_cpoly, parse_element, Expr, Mode, ParseError, Value};
pub use identities::{Param, Session, Status, TPoly, VerificationReport};
pub use minors::{qminor, IndexSet, Minors, Permutation};
pub use poisson::{pbracket, CPoly};
pub use qmatrix::{qpower, star, trace, QMatrix};
pub use verify::{run_verify, Check, Format, RunConfig, RunSummary};
