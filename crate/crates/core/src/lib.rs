//! Polychromatic point coloring for translates of a centrally symmetric
//! convex polygon.
//!
//! Given a finite planar point set S, a centrally symmetric convex 2n-gon
//! Q, and a color count k, [`coloring::decompose`] produces a k-coloring of
//! S such that every translate of Q containing enough points contains all k
//! colors. "Enough" is linear in k: c_Q * (18k + 9), where c_Q is a tiling
//! constant of Q. The [`oracle`] module verifies the guarantee and the
//! intermediate structural invariants by independent brute force.
//!
//! Pipeline, per grid square of the δ-tiling:
//! level curves ([`levels`]) -> high-depth truncation region ([`truncation`])
//! -> cyclic witness wedges ([`witness`]) -> greedy circular-arc cover
//! ([`coloring`]).

pub mod coloring;
pub mod generate;
pub mod geom;
pub mod instance;
pub mod levels;
pub mod oracle;
pub mod rational;
pub mod render;
pub mod tiling;
pub mod truncation;
pub mod witness;

pub use geom::{Point, SymmetricPolygon, Wedge};
pub use rational::Rat;
