//! Fundamental groups and integral homology of knot complements and of 3-manifolds
//! given by Heegaard diagrams.
//!
//! The knot pipeline runs from a PD or signed Gauss code through the Wirtinger
//! presentation to the homology of the presentation complex:
//!
//! ```
//! use knotforge::diagram::parse_pd;
//! use knotforge::homology::knot_homology;
//!
//! let trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
//! let h = knot_homology(&trefoil);
//! assert_eq!(h.h1.to_string(), "Z");
//! assert_eq!(h.h2.to_string(), "0");
//! ```

pub mod cli;
pub mod diagram;
pub mod fpgroup;
pub mod homology;
mod json;
pub mod manifold;
pub mod table;
pub mod wirtinger;
