//! Exact machinery for ping-pong certificates of free subgroups of hyperbolic
//! isometry groups, in two concrete geometries (the hyperbolic plane acting on
//! its circle at infinity, and free products of cyclic groups acting on their
//! Bass–Serre trees), together with a brute-force engine for Frattini
//! subgroups and invariable generation of small finite groups.

pub mod arith;
pub mod frattini;
pub mod freeprod;
pub mod mobius;
pub mod pingpong;
pub mod text;
