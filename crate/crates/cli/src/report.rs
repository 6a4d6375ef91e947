//! Serializable report shapes. Arbitrary-precision values travel as decimal
//! strings so no JSON consumer has to trust 64-bit number semantics.

use std::collections::BTreeMap;

use serde::Serialize;

use lapsnf::{
    ClassificationReport, EnumerationSummary, Graph, S3Class, ViolationRecord,
};

#[derive(Serialize)]
pub struct ClassifyDto {
    pub source: String,
    pub n: usize,
    pub factors: Vec<String>,
    pub s3_class: &'static str,
    pub matched_family: Option<&'static str>,
    pub structural_check_passed: bool,
    pub tree_count: String,
    pub diameter: String,
    pub s2: Option<String>,
    pub s3: Option<String>,
    pub deltas: Option<Vec<String>>,
}

impl ClassifyDto {
    pub fn new(source: &str, report: &ClassificationReport) -> Self {
        let p = &report.profile;
        ClassifyDto {
            source: source.to_string(),
            n: p.n,
            factors: p.factors.iter().map(|f| f.to_string()).collect(),
            s3_class: report.s3_class.name(),
            matched_family: report.matched_family.map(|f| f.name()),
            structural_check_passed: report.structural_check_passed,
            tree_count: p.tree_count.to_string(),
            diameter: p.diameter.to_string(),
            s2: p.s2.as_ref().map(|v| v.to_string()),
            s3: p.s3.as_ref().map(|v| v.to_string()),
            deltas: p.deltas.as_ref().map(|ds| ds.iter().map(|d| d.to_string()).collect()),
        }
    }

    pub fn text_line(&self) -> String {
        format!(
            "{} n={} class={} family={} structural_ok={} factors=[{}] trees={} diameter={}",
            self.source,
            self.n,
            self.s3_class,
            self.matched_family.unwrap_or("-"),
            self.structural_check_passed,
            self.factors.join(" "),
            self.tree_count,
            self.diameter,
        )
    }
}

#[derive(Serialize)]
pub struct ViolationDto {
    pub claim: &'static str,
    pub graph6: String,
    pub details: String,
}

#[derive(Serialize)]
pub struct VerifyDto {
    pub n: usize,
    pub total_connected: u64,
    /// s3 value (decimal string) -> class count, complete graph excluded.
    pub s3_histogram: BTreeMap<String, u64>,
    /// class name -> graph6 of each witness, canonically labeled.
    pub witnesses: BTreeMap<&'static str, Vec<String>>,
    pub violations: Vec<ViolationDto>,
}

fn canon_to_graph6(n: usize, canon: u64) -> String {
    let g = Graph::from_edge_mask(n, canon).expect("witness masks decode");
    String::from_utf8(lapsnf::emit_graph6(&g)).expect("graph6 is ASCII")
}

fn violation_dto(n: usize, v: &ViolationRecord) -> ViolationDto {
    ViolationDto {
        claim: v.claim.name(),
        graph6: canon_to_graph6(n, v.canon),
        details: v.details.clone(),
    }
}

impl VerifyDto {
    /// Folds the theorem summary and any side-claim violations into one
    /// record.
    pub fn new(summary: &EnumerationSummary, side: &[ViolationRecord]) -> Self {
        let n = summary.n;
        VerifyDto {
            n,
            total_connected: summary.total_connected,
            s3_histogram: summary
                .s3_histogram
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            witnesses: summary
                .witnesses
                .iter()
                .map(|(class, canons)| {
                    let lines = canons.iter().map(|&c| canon_to_graph6(n, c)).collect();
                    (class.name(), lines)
                })
                .collect(),
            violations: summary
                .violations
                .iter()
                .chain(side)
                .map(|v| violation_dto(n, v))
                .collect(),
        }
    }

    /// Record for orders where only the side claims apply (n = 3, 4).
    pub fn side_only(n: usize, total_connected: u64, side: &[ViolationRecord]) -> Self {
        VerifyDto {
            n,
            total_connected,
            s3_histogram: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            violations: side.iter().map(|v| violation_dto(n, v)).collect(),
        }
    }

    pub fn text_line(&self) -> String {
        let mut line = format!("n={}: {} connected classes", self.n, self.total_connected);
        for class in S3Class::CHARACTERIZED {
            if let Some(list) = self.witnesses.get(class.name()) {
                line.push_str(&format!(" {}={}", class.name(), list.len()));
            }
        }
        if !self.s3_histogram.is_empty() {
            let mut hist: Vec<(u64, u64)> = self
                .s3_histogram
                .iter()
                .map(|(k, v)| (k.parse().unwrap_or(u64::MAX), *v))
                .collect();
            hist.sort_unstable();
            let parts: Vec<String> =
                hist.iter().map(|(value, count)| format!("{value}:{count}")).collect();
            line.push_str(&format!("; s3 histogram {{{}}}", parts.join(", ")));
        }
        line.push_str(&format!("; violations: {}", self.violations.len()));
        line
    }

    pub fn write_csv<W: std::io::Write>(reports: &[VerifyDto], out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "record", "key", "value"])?;
        for dto in reports {
            let n = dto.n.to_string();
            w.write_record([&n, "total_connected", "", &dto.total_connected.to_string()])?;
            for (s3, count) in &dto.s3_histogram {
                w.write_record([&n, "histogram", s3, &count.to_string()])?;
            }
            for (class, lines) in &dto.witnesses {
                for g6 in lines {
                    w.write_record([&n, "witness", class, g6])?;
                }
            }
            for v in &dto.violations {
                w.write_record([&n, "violation", v.claim, &format!("{} {}", v.graph6, v.details)])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// Streams classification rows to CSV; the header goes out on construction.
pub struct ClassifyCsvWriter<W: std::io::Write> {
    inner: csv::Writer<W>,
}

impl<W: std::io::Write> ClassifyCsvWriter<W> {
    pub fn new(out: W) -> Result<Self, crate::input::CliError> {
        let mut inner = csv::Writer::from_writer(out);
        inner
            .write_record([
                "source",
                "n",
                "factors",
                "s3_class",
                "matched_family",
                "structural_check_passed",
                "tree_count",
                "diameter",
            ])
            .map_err(csv_err)?;
        Ok(ClassifyCsvWriter { inner })
    }

    pub fn write(&mut self, dto: &ClassifyDto) -> Result<(), crate::input::CliError> {
        self.inner
            .write_record([
                dto.source.as_str(),
                &dto.n.to_string(),
                &dto.factors.join(" "),
                dto.s3_class,
                dto.matched_family.unwrap_or(""),
                &dto.structural_check_passed.to_string(),
                &dto.tree_count,
                &dto.diameter,
            ])
            .map_err(csv_err)
    }

    pub fn flush(&mut self) -> Result<(), crate::input::CliError> {
        self.inner.flush().map_err(|e| crate::input::CliError::Input(e.to_string()))
    }
}

fn csv_err(e: csv::Error) -> crate::input::CliError {
    crate::input::CliError::Input(e.to_string())
}
