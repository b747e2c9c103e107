//! File formats for the `linsys` command-line tool: canonical JSON
//! encodings of instances, certificates, and verification reports.
//!
//! Canonical form means: UTF-8, LF line endings, two-space indentation,
//! object keys in a fixed (alphabetical) order, point labels sorted, each
//! line's labels sorted, and lines sorted as label lists — so emitting the
//! same instance twice yields byte-identical files and content digests are
//! stable across platforms.

use std::collections::BTreeMap;

use linsys::{Certificate, CertificateKind, CheckOutcome, LinearSystem, VerificationReport};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Schema version accepted and emitted by this build.
pub const FORMAT_VERSION: u32 = 1;

/// On-disk form of a linear system. Field declaration order is
/// alphabetical, which is the key order serde emits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub lines: Vec<Vec<String>>,
    /// Free-form provenance (generator name, parameters, seed); keys sorted.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
    pub points: Vec<String>,
}

/// On-disk form of a solver certificate. Exactly one of `witness_lines`
/// (2-packing) and `witness_points` (transversal) is present, matching
/// `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub format_version: u32,
    /// `sha256:<hex>` over the canonical bytes of the instance it certifies.
    pub instance_digest: String,
    /// `"tau"` or `"nu2"`.
    pub kind: String,
    pub optimal: bool,
    pub value: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_lines: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_points: Option<Vec<String>>,
}

/// On-disk form of a [`VerificationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleFile>,
    pub details: Vec<RecordFile>,
    pub format_version: u32,
    pub instances_checked: usize,
    pub passed: bool,
    pub theorem_id: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleFile {
    pub encoding: String,
    pub instance_id: String,
    pub offending: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordFile {
    pub instance_id: String,
    pub message: String,
    /// `"passed"`, `"failed"`, or `"inconclusive"`.
    pub outcome: String,
}

/// Serializes any of the file types in canonical form: two-space pretty
/// JSON with a trailing newline.
pub fn emit_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("file types serialize");
    text.push('\n');
    text
}

/// Builds the canonical instance file for a system: points sorted, line
/// labels sorted within each line, lines sorted as lists.
pub fn canonical_instance(ls: &LinearSystem, metadata: BTreeMap<String, String>) -> InstanceFile {
    let mut points = ls.points().to_vec();
    points.sort();
    let mut lines: Vec<Vec<String>> = ls
        .lines_as_labels()
        .into_iter()
        .map(|mut labels| {
            labels.sort();
            labels
        })
        .collect();
    lines.sort();
    InstanceFile {
        format_version: FORMAT_VERSION,
        lines,
        metadata,
        points,
    }
}

/// Parses and validates an instance file, returning both the file and the
/// in-memory system. The error string names the first problem found.
pub fn parse_instance(text: &str) -> Result<(InstanceFile, LinearSystem), String> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| format!("instance file is not valid JSON: {e}"))?;
    if file.format_version != FORMAT_VERSION {
        return Err(format!(
            "unsupported format_version {} (expected {FORMAT_VERSION})",
            file.format_version
        ));
    }
    let system = LinearSystem::validate(file.points.clone(), file.lines.clone())
        .map_err(|e| format!("instance does not validate: {e}"))?;
    Ok((file, system))
}

/// Content digest of an instance: sha256 over its re-canonicalized bytes
/// (metadata included), so files that differ only in formatting or in
/// point/line order digest identically.
pub fn instance_digest(file: &InstanceFile) -> String {
    let system = LinearSystem::validate(file.points.clone(), file.lines.clone())
        .expect("digested instances validate");
    let canonical = canonical_instance(&system, file.metadata.clone());
    let mut hasher = Sha256::new();
    hasher.update(emit_json(&canonical).as_bytes());
    format!("sha256:{:x}", hasher.finalize())
}

/// Converts a solver certificate into its on-disk form, resolving indices
/// to labels and sorting them canonically.
pub fn certificate_file(
    instance: &InstanceFile,
    ls: &LinearSystem,
    certificate: &Certificate,
) -> CertificateFile {
    let (kind, witness_points, witness_lines) = match certificate.kind {
        CertificateKind::Tau => {
            let mut labels: Vec<String> = certificate
                .witness
                .iter()
                .map(|&p| ls.label(p).to_string())
                .collect();
            labels.sort();
            ("tau", Some(labels), None)
        }
        CertificateKind::Nu2 => {
            let mut lines: Vec<Vec<String>> = certificate
                .witness
                .iter()
                .map(|&i| {
                    let mut labels: Vec<String> =
                        ls.line_labels(i).into_iter().map(String::from).collect();
                    labels.sort();
                    labels
                })
                .collect();
            lines.sort();
            ("nu2", None, Some(lines))
        }
    };
    CertificateFile {
        format_version: FORMAT_VERSION,
        instance_digest: instance_digest(instance),
        kind: kind.to_string(),
        optimal: certificate.optimal,
        value: certificate.value,
        witness_lines,
        witness_points,
    }
}

/// Re-checks a certificate against an instance: the digest must match and
/// the witness must prove the stated value through the core predicates.
pub fn reverify_certificate(
    certificate: &CertificateFile,
    instance: &InstanceFile,
    ls: &LinearSystem,
) -> Result<(), String> {
    let digest = instance_digest(instance);
    if certificate.instance_digest != digest {
        return Err(format!(
            "digest mismatch: certificate names {} but the instance digests to {digest}",
            certificate.instance_digest
        ));
    }
    match certificate.kind.as_str() {
        "tau" => {
            let witness = certificate
                .witness_points
                .as_ref()
                .ok_or("tau certificate lacks witness_points")?;
            if witness.len() != certificate.value {
                return Err(format!(
                    "witness has {} points but value is {}",
                    witness.len(),
                    certificate.value
                ));
            }
            let covers = ls
                .is_transversal(witness)
                .map_err(|e| format!("witness does not resolve: {e}"))?;
            if !covers {
                return Err("witness points miss a line".to_string());
            }
        }
        "nu2" => {
            let witness = certificate
                .witness_lines
                .as_ref()
                .ok_or("nu2 certificate lacks witness_lines")?;
            if witness.len() != certificate.value {
                return Err(format!(
                    "witness has {} lines but value is {}",
                    witness.len(),
                    certificate.value
                ));
            }
            let mut own: BTreeMap<Vec<String>, usize> = BTreeMap::new();
            for i in 0..ls.num_lines() {
                let mut labels: Vec<String> =
                    ls.line_labels(i).into_iter().map(String::from).collect();
                labels.sort();
                own.insert(labels, i);
            }
            let mut indices = Vec::new();
            for line in witness {
                let mut sorted = line.clone();
                sorted.sort();
                let &index = own
                    .get(&sorted)
                    .ok_or_else(|| format!("witness line {sorted:?} is not an instance line"))?;
                indices.push(index);
            }
            indices.sort_unstable();
            indices.dedup();
            if indices.len() != witness.len() {
                return Err("witness repeats a line".to_string());
            }
            let packs = ls
                .is_2packing(&indices)
                .map_err(|e| format!("witness does not resolve: {e}"))?;
            if !packs {
                return Err("witness lines concentrate three deep on a point".to_string());
            }
        }
        other => return Err(format!("unknown certificate kind {other:?}")),
    }
    Ok(())
}

/// Converts a verification report into its on-disk form. The caller names
/// the theorem as requested on the command line (the library id may be a
/// combined one such as `props_31_32`).
pub fn report_file(report: &VerificationReport, theorem_id: &str) -> ReportFile {
    ReportFile {
        counterexample: report.counterexample.as_ref().map(|c| CounterexampleFile {
            encoding: c.encoding.clone(),
            instance_id: c.instance_id.clone(),
            offending: c.offending.clone(),
        }),
        details: report
            .details
            .iter()
            .map(|r| RecordFile {
                instance_id: r.instance_id.clone(),
                message: r.message.clone(),
                outcome: match r.outcome {
                    CheckOutcome::Passed => "passed",
                    CheckOutcome::Failed => "failed",
                    CheckOutcome::Inconclusive => "inconclusive",
                }
                .to_string(),
            })
            .collect(),
        format_version: FORMAT_VERSION,
        instances_checked: report.instances_checked,
        passed: report.passed,
        theorem_id: theorem_id.to_string(),
    }
}
