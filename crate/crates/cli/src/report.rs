use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "# frattkit report v1";

/// A plain-text report: schema header, command echo, digest of the inputs,
/// then free-form result lines and the exit status.
pub struct Report {
    command: String,
    hasher: Sha256,
    lines: Vec<String>,
}

impl Report {
    pub fn new(args: &[String]) -> Self {
        let command = args.iter().map(|a| quote(a)).collect::<Vec<_>>().join(" ");
        let mut hasher = Sha256::new();
        for a in args {
            hasher.update(a.as_bytes());
            hasher.update([0]);
        }
        Report {
            command,
            hasher,
            lines: vec![],
        }
    }

    /// Mixes the contents of an input file into the digest.
    pub fn digest_input(&mut self, bytes: &[u8]) {
        self.hasher.update(bytes);
        self.hasher.update([0]);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        let s = s.into();
        self.lines.extend(s.lines().map(str::to_string));
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        let tag = if passed { "PASS" } else { "FAIL" };
        self.lines.push(format!("{tag} {name}"));
    }

    pub fn render(self, exit: u8) -> String {
        let digest = self.hasher.finalize();
        let hex: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
        let mut out = format!("{SCHEMA}\ncommand: {}\ninput-digest: sha256:{hex}\n", self.command);
        for l in self.lines {
            out.push_str(&l);
            out.push('\n');
        }
        out.push_str(&format!("exit: {exit}\n"));
        out
    }
}

fn quote(a: &str) -> String {
    if !a.is_empty() && a.chars().all(|c| c.is_ascii_alphanumeric() || "-_./,:=+".contains(c)) {
        a.to_string()
    } else {
        format!("\"{}\"", a.replace('\\', "\\\\").replace('"', "\\\""))
    }
}
