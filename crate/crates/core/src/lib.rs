//! Exact laboratory for factorization properties of integral domains built from polynomial
//! rings and monoid algebras.

pub mod checker;
pub mod domains;
pub mod error;
pub mod exact;
pub mod monoids;
pub mod poly;
pub mod verdict;

pub use checker::{classify_all, classify_domain, dag_consistency, separation_table, ClassificationRow, PropertyId};
pub use domains::{BiExp, Domain, DomainId, GenPoly};
pub use error::{Error, Result};
pub use exact::{QLin, Rat};
pub use monoids::{MonoidElem, MonoidId, S4Elem, SeqElem};
pub use verdict::{Basis, Certificate, Outcome, Rule, SearchBounds, Verdict};
