//! Machine-readable reports. Every JSON document is an object whose first
//! field is `"schema": 1`, followed by the command's fields in the order
//! they are declared below. Field values from `k` or
//! `K` are exact rendered strings, never floating point numbers.

use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Text rendering plus the verdict that decides the exit status.
pub trait Report: Serialize {
    fn text(&self) -> String;
    fn verdict(&self) -> bool {
        true
    }
}

#[derive(Serialize)]
struct Envelope<'a, R: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: &'a R,
}

pub fn to_json<R: Report>(report: &R) -> String {
    let env = Envelope {
        schema: SCHEMA,
        body: report,
    };
    serde_json::to_string(&env).expect("reports serialize")
}

#[derive(Serialize)]
pub struct ResidueReport {
    pub form: String,
    pub place: String,
    pub residue: String,
}

impl Report for ResidueReport {
    fn text(&self) -> String {
        self.residue.clone()
    }
}

#[derive(Serialize)]
pub struct PolarRow {
    pub place: String,
    pub component: String,
    pub order: u32,
    pub numerator: String,
}

#[derive(Serialize)]
pub struct RhoReport {
    pub form: String,
    pub parts: Vec<PolarRow>,
}

impl Report for RhoReport {
    /// Family-file rows, so the output can be passed to `realize`.
    fn text(&self) -> String {
        self.parts
            .iter()
            .map(|r| {
                format!(
                    "{} | {} | {} | {}",
                    r.place, r.component, r.order, r.numerator
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[derive(Serialize)]
pub struct TanReport {
    pub symbol: String,
    pub tan: String,
    pub tan_rel: String,
}

impl Report for TanReport {
    fn text(&self) -> String {
        self.tan.clone()
    }
}

#[derive(Serialize)]
pub struct Factor {
    pub symbol: String,
    pub tan: String,
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub symbol: String,
    pub factors: Vec<Factor>,
    pub sum: String,
    pub recomposes: bool,
}

impl Report for DecomposeReport {
    fn text(&self) -> String {
        let mut lines: Vec<String> = self
            .factors
            .iter()
            .map(|f| format!("{} -> {}", f.symbol, f.tan))
            .collect();
        lines.push(format!("sum {}", self.sum));
        lines.join("\n")
    }
}

#[derive(Serialize)]
pub struct ExactReport {
    pub form: String,
    pub exact: bool,
    pub witness: Option<String>,
}

impl Report for ExactReport {
    fn text(&self) -> String {
        match &self.witness {
            Some(h) => format!("exact: d({h})"),
            None => "not exact".into(),
        }
    }
    fn verdict(&self) -> bool {
        self.exact
    }
}

#[derive(Serialize)]
pub struct BasisReport {
    pub basis: Vec<String>,
    pub dimension: usize,
}

impl Report for BasisReport {
    fn text(&self) -> String {
        let mut lines = vec![format!("dimension {}", self.dimension)];
        lines.extend(self.basis.iter().cloned());
        lines.join("\n")
    }
}

#[derive(Serialize)]
pub struct RealizeReport {
    pub realizable: bool,
    pub total_residue: String,
    pub witness: Option<String>,
}

impl Report for RealizeReport {
    fn text(&self) -> String {
        match &self.witness {
            Some(w) => format!("realized by {w}"),
            None => format!("obstructed: total residue {}", self.total_residue),
        }
    }
    fn verdict(&self) -> bool {
        self.realizable
    }
}

#[derive(Serialize)]
pub struct Entry {
    pub place: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Serialize)]
pub struct VerifyResReport {
    pub form: String,
    pub entries: Vec<Entry>,
    pub residue_sum: String,
    pub verdict: bool,
    pub failing: Vec<String>,
}

impl Report for VerifyResReport {
    fn text(&self) -> String {
        let mut lines: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                format!(
                    "{}: {} {} {}",
                    e.place,
                    e.lhs,
                    if e.equal { "=" } else { "!=" },
                    e.rhs
                )
            })
            .collect();
        lines.push(format!("residue sum {}", self.residue_sum));
        lines.push(format!("verdict {}", self.verdict));
        lines.join("\n")
    }
    fn verdict(&self) -> bool {
        self.verdict
    }
}

#[derive(Serialize)]
pub struct VerifyTanReport {
    pub symbol: String,
    pub absolute: String,
    pub relative: String,
    pub projected: String,
    pub factors: Vec<String>,
    pub factor_sum: String,
    pub discrepancy: String,
    pub compatible: bool,
    pub additive: bool,
    pub recomposes: bool,
    pub verdict: bool,
}

impl Report for VerifyTanReport {
    fn text(&self) -> String {
        [
            format!("tan {}", self.absolute),
            format!("tan_rel {}", self.relative),
            format!("R'(tan) {}", self.projected),
            format!("compatible {}", self.compatible),
            format!("additive {}", self.additive),
            format!("recomposes {}", self.recomposes),
            format!("verdict {}", self.verdict),
        ]
        .join("\n")
    }
    fn verdict(&self) -> bool {
        self.verdict
    }
}

#[derive(Serialize)]
pub struct Suite {
    pub name: String,
    pub cases: u64,
    pub passed: u64,
    pub first_failure: Option<String>,
}

#[derive(Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub count: u64,
    pub suites: Vec<Suite>,
    pub verdict: bool,
}

impl Report for SelftestReport {
    fn text(&self) -> String {
        let mut lines: Vec<String> = self
            .suites
            .iter()
            .map(|s| {
                let mut l = format!("{} {}/{}", s.name, s.passed, s.cases);
                if let Some(f) = &s.first_failure {
                    l.push_str(&format!(" first failure: {f}"));
                }
                l
            })
            .collect();
        lines.push(format!("seed {} verdict {}", self.seed, self.verdict));
        lines.join("\n")
    }
    fn verdict(&self) -> bool {
        self.verdict
    }
}
