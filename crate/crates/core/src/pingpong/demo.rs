use std::fmt;

use super::backend::Backend;
use super::certificate::{Limits, PingPongCertificate, PingPongInput, SearchExhausted, VerificationReport};
use super::construct::{construct, verify};

/// The free-subgroup step of the argument that a group with a general type
/// action cannot be generated by `Φ(G)` together with finitely many elements,
/// run on concrete data.
#[derive(Clone, Debug)]
pub struct Main0Demo<B: Backend> {
    pub certificate: PingPongCertificate<B>,
    pub report: VerificationReport,
    /// `x_i = b_i^-1 y_i a_i^-1` holds exactly for every `i`, so `{f, g} ∪ X`
    /// and `{y_i} ∪ {f, g}` generate the same subgroup.
    pub same_subgroup: bool,
    /// `f` fixes the witness `f+`.
    pub f_fixes_witness: bool,
}

impl<B: Backend> Main0Demo<B> {
    pub fn machine_checked(&self) -> bool {
        self.report.passed() && self.same_subgroup && self.f_fixes_witness
    }
}

pub fn demo_main0<B: Backend + Clone>(
    input: &PingPongInput<B>,
    limits: Limits,
) -> Result<Main0Demo<B>, SearchExhausted> {
    let certificate = construct(input, limits)?;
    let report = verify(&certificate);
    let be = &certificate.backend;
    let same_subgroup = (0..certificate.len()).all(|i| {
        let d = certificate.derived(i);
        let back = be.compose(
            &be.compose(&be.inverse(&d.b), &d.y),
            &be.inverse(&d.a),
        );
        back == certificate.x[i]
    });
    let f_fixes_witness = be.apply(&certificate.f, &certificate.witness) == certificate.witness;
    Ok(Main0Demo {
        certificate,
        report,
        same_subgroup,
        f_fixes_witness,
    })
}

impl<B: Backend> fmt::Display for Main0Demo<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes = |b: bool| if b { "checked" } else { "FAILED" };
        writeln!(f, "generators y_i = b_i x_i a_i: {}", self.certificate.len())?;
        writeln!(
            f,
            "[machine] ping-pong certificate for F = <y_i> free: {}",
            yes(self.report.passed())
        )?;
        writeln!(
            f,
            "[machine] f fixes f+ while every nontrivial w in F moves it, so f is not in F: {}",
            yes(self.report.passed() && self.f_fixes_witness)
        )?;
        writeln!(
            f,
            "[machine] x_i = b_i^-1 y_i a_i^-1 with a_i, b_i in <f, g>, so <f, g, X> = <f, g, y_i>: {}",
            yes(self.same_subgroup)
        )?;
        writeln!(
            f,
            "[cited] elements of the Frattini subgroup are non-generators, so if f, g were in Phi(G) then G = <X, f, g> would equal <y_i> = F"
        )?;
        writeln!(
            f,
            "conclusion: {}",
            if self.machine_checked() {
                "F is a proper free subgroup missing f; with the cited step this contradicts f, g in Phi(G)"
            } else {
                "not established"
            }
        )
    }
}
