use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use stmodk_core::algebras::GradedAlgebraDescriptor;
use stmodk_core::cluster::{parity_check, phantom_verdict};
use stmodk_core::json::big_to_value;
use stmodk_core::ktheory::{phantom_scan, quillen_k, stable_kh, FiniteFieldSpec};
use stmodk_core::oracle::{run_suite, Suite};
use stmodk_core::phimat::{exterior_phi, koszul_column, verify_snf_claim, SignedDeterminant};
use stmodk_core::{PhiConvention, Result};

use crate::report::Report;
use crate::{BaseArgs, Command, SuiteArg};

const CONE_NOTE: &str = "Cartan cone theorem: E(stmod Λ) ≅ cone(E(k)^n --C_Λ--> E(k)^n)";
const K0_NOTE: &str = "K0/KH0 comparison lemma: KH_0(stmod Λ) ≅ K_0(stmod Λ) ≅ coker(C_Λ)";
const QUILLEN_NOTE: &str =
    "Quillen's theorem: K_{2i-1}(F_q) ≅ Z/(q^i - 1), K_{2i}(F_q) = 0 for i >= 1";
const EXTERIOR_NOTE: &str = "exterior algebra theorem: E(stmod Λ) ≅ cone(E(k) --·2^g--> E(k))";
const GROUP_ALGEBRA_NOTE: &str =
    "elementary abelian corollary: KH_0 ≅ Z/p^r and KH_i = 0 for i >= 1 over F_p";
const PHI_NOTE: &str =
    "orbit cofibre sequence: φ has the Koszul column ψ_{-i} = (-1)^{i+1} C(g, i+1)";
const SNF_NOTE: &str = "Smith form identity: snf(φ) = diag(1, ..., 1, snf(C_Λ)), |det φ| = dim Λ";
const CLUSTER_NOTE: &str =
    "cluster phantom theorem: E(C_(A_n)) ≅ cone(-E(τ^-1) - 1) vanishes when the determinant is a unit";
const PARITY_NOTE: &str =
    "determinant parity lemma: det φ_n = 1 - det φ_(n-1), so 1 for even n and 0 for odd n";

pub struct Outcome {
    pub report: Report,
    pub success: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            success: true,
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Exterior { generators, base } => {
            let algebra = GradedAlgebraDescriptor::exterior(*generators)?;
            invariant_report(
                "exterior",
                json!({ "generators": generators, "base_q": base.base_q, "max_degree": base.max_degree }),
                &algebra,
                base,
                &[EXTERIOR_NOTE],
            )
        }
        Command::GroupAlgebra {
            p,
            r,
            base_q,
            max_degree,
        } => {
            let algebra = GradedAlgebraDescriptor::elem_abelian_group_algebra(*p, *r)?;
            let base = BaseArgs {
                base_q: base_q.unwrap_or(*p),
                max_degree: *max_degree,
            };
            let extra: &[&str] = if base.base_q == *p {
                &[GROUP_ALGEBRA_NOTE, QUILLEN_NOTE]
            } else {
                &[QUILLEN_NOTE]
            };
            invariant_report(
                "group-algebra",
                json!({ "p": p, "r": r, "base_q": base.base_q, "max_degree": base.max_degree }),
                &algebra,
                &base,
                extra,
            )
        }
        Command::Truncated { m, base } => {
            let algebra = GradedAlgebraDescriptor::truncated_poly(*m)?;
            invariant_report(
                "truncated",
                json!({ "m": m, "base_q": base.base_q, "max_degree": base.max_degree }),
                &algebra,
                base,
                &[QUILLEN_NOTE],
            )
        }
        Command::Nakayama { n, length, base } => {
            let algebra = GradedAlgebraDescriptor::nakayama(*n, *length)?;
            invariant_report(
                "nakayama",
                json!({ "n": n, "length": length, "base_q": base.base_q, "max_degree": base.max_degree }),
                &algebra,
                base,
                &[QUILLEN_NOTE],
            )
        }
        Command::AlgebraFile { path, base } => {
            let algebra = GradedAlgebraDescriptor::from_file(path)?;
            invariant_report(
                "algebra-file",
                json!({ "path": display_path(path), "base_q": base.base_q, "max_degree": base.max_degree }),
                &algebra,
                base,
                &[QUILLEN_NOTE],
            )
        }
        Command::Cluster { n, scan_to } => cluster(*n, *scan_to).map(Outcome::from),
        Command::Kgroups { q, max_degree } => kgroups(*q, *max_degree).map(Outcome::from),
        Command::Phi {
            generators,
            verify_snf,
        } => phi(*generators, *verify_snf),
        Command::PhantomScan { paths } => scan(paths).map(Outcome::from),
        Command::Verify { suite, seed } => Ok(verify(*suite, *seed)),
    }
}

fn display_path(path: &Path) -> String {
    path.to_string_lossy().into_owned()
}

fn invariant_report(
    command: &str,
    inputs: Value,
    algebra: &GradedAlgebraDescriptor,
    base: &BaseArgs,
    extra_notes: &[&str],
) -> Result<Outcome> {
    let field = FiniteFieldSpec::new(base.base_q)?;
    let result = stable_kh(algebra, &field, base.max_degree)?;

    let mut report = Report::new(command, inputs);
    report.results = to_value(&result);
    report.provenance_notes = vec![CONE_NOTE.to_string(), K0_NOTE.to_string()];
    report
        .provenance_notes
        .extend(extra_notes.iter().map(|s| s.to_string()));
    report.provenance_notes.extend(result.notes.iter().cloned());

    report.text.push(format!("algebra: {}", algebra.label()));
    report.text.push(format!("base field: F_{}", field.q));
    report
        .text
        .push(format!("cone: {}", result.symbolic_cone.template));
    report
        .text
        .push(format!("det C_Λ = {}", result.symbolic_cone.determinant));
    for g in &result.groups {
        let flag = if g.ambiguous {
            "  (extension ambiguous)"
        } else {
            ""
        };
        report
            .text
            .push(format!("KH_{} = {}{}", g.degree, g.group, flag));
    }
    Ok(report.into())
}

fn cluster(n: usize, scan_to: Option<usize>) -> Result<Report> {
    let last = scan_to.unwrap_or(n).max(n);
    let reports = (n..=last)
        .map(phantom_verdict)
        .collect::<Result<Vec<_>>>()?;
    let parity = parity_check(last)?;

    let mut report = Report::new("cluster", json!({ "n": n, "scan_to": scan_to }));
    report.results = json!({
        "reports": to_value(&reports),
        "parity_check": to_value(&parity),
    });
    report.provenance_notes = vec![CLUSTER_NOTE.to_string(), PARITY_NOTE.to_string()];
    for r in &reports {
        report.text.push(format!(
            "A_{}: det φ = {}, phantom = {}, cokernel = {}",
            r.n, r.determinant, r.is_phantom, r.cokernel
        ));
        report
            .text
            .extend(r.notes.iter().map(|note| format!("  {note}")));
    }
    report.text.push(format!(
        "parity check n = 2..{last}: {} rows agree",
        parity.len()
    ));
    Ok(report)
}

fn kgroups(q: u64, max_degree: u32) -> Result<Report> {
    let field = FiniteFieldSpec::new(q)?;
    let groups: Vec<Value> = (0..=max_degree)
        .map(|i| json!({ "i": i, "group": quillen_k(&field, i).to_string() }))
        .collect();

    let mut report = Report::new("kgroups", json!({ "q": q, "max_degree": max_degree }));
    report.text = (0..=max_degree)
        .map(|i| format!("K_{i}(F_{q}) = {}", quillen_k(&field, i)))
        .collect();
    report.results = json!({ "base": to_value(&field), "groups": groups });
    report.provenance_notes = vec![QUILLEN_NOTE.to_string()];
    Ok(report)
}

fn phi(generators: u32, verify: bool) -> Result<Outcome> {
    let matrix = exterior_phi(generators)?;
    let det = SignedDeterminant::of(&matrix)?;
    let koszul = koszul_column(generators)?;
    let snf = matrix.snf();
    let convention = PhiConvention::Desuspended;

    let mut results = json!({
        "matrix": to_value(&matrix),
        "convention": convention.describe(),
        "determinant": to_value(&det),
        "koszul_column": to_value(&koszul),
        "snf_diagonal": big_seq(&snf.d.diagonal()),
    });
    let mut report = Report::new(
        "phi",
        json!({ "generators": generators, "verify_snf": verify }),
    );
    report.provenance_notes = vec![PHI_NOTE.to_string(), SNF_NOTE.to_string()];
    report.text.push(format!("φ = {matrix}"));
    report
        .text
        .push(format!("convention: {}", convention.describe()));
    report
        .text
        .push(format!("det φ = {} (|det| = {})", det.value, det.abs));
    report
        .text
        .push(format!("snf diagonal: {}", join(&snf.d.diagonal())));

    let mut success = true;
    if verify {
        let algebra = GradedAlgebraDescriptor::exterior(generators)?;
        let verdict = verify_snf_claim(&matrix, algebra.cartan())?;
        report.text.push(format!(
            "expected diagonal: {}",
            join(&verdict.expected_diagonal)
        ));
        report.text.push(format!("verdict: {}", verdict.holds));
        success = verdict.holds;
        results["verdict"] = to_value(&verdict);
    }
    report.results = results;
    Ok(Outcome { report, success })
}

fn big_seq(xs: &[stmodk_core::BigInt]) -> Value {
    Value::Array(xs.iter().map(big_to_value).collect())
}

fn join(xs: &[stmodk_core::BigInt]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn scan(paths: &[std::path::PathBuf]) -> Result<Report> {
    let algebras = paths
        .iter()
        .map(|p| GradedAlgebraDescriptor::from_file(p))
        .collect::<Result<Vec<_>>>()?;
    let entries = phantom_scan(&algebras);

    let inputs: Vec<String> = paths.iter().map(|p| display_path(p)).collect();
    let mut report = Report::new("phantom-scan", json!({ "paths": inputs }));
    report.results = to_value(&entries);
    report.provenance_notes = vec![CONE_NOTE.to_string()];
    for (path, e) in inputs.iter().zip(&entries) {
        report.text.push(format!(
            "{path}: {} det C = {}, phantom = {}",
            e.algebra.label(),
            e.determinant,
            e.is_phantom
        ));
    }
    Ok(report)
}

fn verify(suite: SuiteArg, seed: u64) -> Outcome {
    let suites: &[Suite] = match suite {
        SuiteArg::Snf => &[Suite::Snf],
        SuiteArg::Modkernel => &[Suite::ModKernel],
        SuiteArg::Nakayama => &[Suite::Nakayama],
        SuiteArg::All => &Suite::ALL,
    };
    let summaries: Vec<_> = suites.iter().map(|&s| run_suite(s, seed)).collect();
    let success = summaries.iter().all(|s| s.passed());

    let name = match suite {
        SuiteArg::All => "all",
        _ => suites[0].name(),
    };
    let mut report = Report::new("verify", json!({ "suite": name, "seed": seed }));
    report.results = json!({ "passed": success, "suites": to_value(&summaries) });
    for s in &summaries {
        report.text.push(format!(
            "{}: {} cases, {} mismatches",
            s.suite, s.cases, s.mismatches
        ));
        if let Some(m) = &s.first_mismatch {
            report.text.push(format!("  first mismatch: {m}"));
        }
    }
    Outcome { report, success }
}
