//! The ping-pong construction for free subgroups: given isometries
//! `x_1, …, x_m` and independent loxodromics `f`, `g`, find `a_i, b_i` in
//! `<f, g>` so that the `y_i = b_i x_i a_i` freely generate a subgroup that
//! misses `f`. Works over any [`Backend`].

pub mod backend;
pub mod certfile;
pub mod certificate;
pub mod construct;
pub mod demo;
pub mod oracle;

pub use backend::{Backend, MobiusBackend, TreeBackend};
pub use certfile::{AnyCertificate, CERTIFICATE_HEADER};
pub use certificate::{
    Check, InputError, Limits, Neighborhoods, PingPongCertificate, PingPongInput, Schedule,
    SearchExhausted, VerificationReport,
};
pub use construct::{construct, verify};
pub use demo::{demo_main0, Main0Demo};
pub use oracle::{freeness_oracle, sample_limit_set, witness_exclusion, GeneratorWord, OracleResult};
