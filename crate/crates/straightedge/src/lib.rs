//! Exact straightedge-and-compass constructions with move counting.
//!
//! A *move* is the act of drawing one line or one circle; placing points is
//! free. Everything is computed over the field of constructible numbers
//! (rationals closed under field operations and square roots), so incidence,
//! tangency and equality tests are exact decisions, never epsilon checks.
//!
//! The crate is organised in layers:
//!
//! * [`cn`] — exact constructible-number arithmetic (quadratic towers with
//!   interval acceleration and decidable sign).
//! * [`geom`] — points, lines, circles and the exact predicates and
//!   transformations on them (intersections, tangency, inversion, similitude
//!   centers, radical circles, a Descartes-circle-theorem solver).
//! * [`engine`] — construction programs: steps, goals, the executor that
//!   evaluates a program into a [`engine::Trace`], and exact goal verification.
//! * [`catalog`] — the built-in constructions (one circle in 1 move, a tangent
//!   circle in 2, a third mutually tangent circle in 5, the Apollonian circle
//!   in 7, its twin in 3 more, an 11-move comparison construction) plus the
//!   checks backing their correctness proofs.
//! * [`search`] — exhaustive iterative-deepening enumeration of programs up to
//!   a move budget, with duplicate pruning and exhaustion certificates.
//! * [`render`] — deterministic SVG rendering of traces.
//! * [`jsonio`] — the JSON wire formats shared by all of the above.

pub mod catalog;
pub mod cn;
pub mod engine;
pub mod geom;
pub mod jsonio;
pub mod render;
pub mod search;

pub use cn::Cn;
pub use geom::{Circle, GeoObject, Line, Point};
