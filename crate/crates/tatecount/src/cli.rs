//! Command implementations behind the `tatecount` binary: fixture parsing,
//! batch verification, and table emission. Everything returns strings and
//! exit codes so the whole surface is testable in-process.
//!
//! Report rows are sorted before emission and contain no timestamps, so a
//! command's output is byte-identical across runs on identical input.

use std::fmt;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::One;

use crate::asai::{parse_model_fixture, DescentOutcome, GaloisModel, DEFAULT_DEGREE_CAP, HARD_DEGREE_CAP};
use crate::error::Error;
use crate::exactnum::CyclotomicNumber;
use crate::formulas::{lemma_even_count, tate_rank, TateRankInput};
use crate::groupcore::{inner_product, parse_group_section, FiniteGroup};
use crate::repcore::{parse_modl_fixture, render_rep_fixture, ModlRep};
use crate::weightalg::{decompose, one_dim_count, CharacterPoly};

/// Output format for report-style commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Plain,
}

impl Default for Format {
    fn default() -> Self {
        Format::Tsv
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Info => write!(f, "info"),
        }
    }
}

/// One check outcome. Rows are sorted by name before emission.
#[derive(Debug, Clone)]
pub struct ReportRow {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// A command report: rows plus an optional summary line. The exit code is 0
/// iff no row failed; informational rows never flip it.
#[derive(Debug, Default)]
pub struct RunReport {
    pub rows: Vec<ReportRow>,
}

impl RunReport {
    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.rows.push(ReportRow {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut info = 0;
        for r in &self.rows {
            match r.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Info => info += 1,
            }
        }
        (pass, fail, info)
    }

    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().any(|r| r.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn render(&self, format: Format, with_summary: bool) -> String {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| (&a.name, a.status, &a.detail).cmp(&(&b.name, b.status, &b.detail)));
        let mut out = String::new();
        for r in &rows {
            match format {
                Format::Tsv => out.push_str(&format!("{}\t{}\t{}\n", r.name, r.status, r.detail)),
                Format::Plain => {
                    let name = r.name.replace('\t', " ");
                    if r.detail.is_empty() {
                        out.push_str(&format!("{}: {}\n", name, r.status));
                    } else {
                        out.push_str(&format!("{}: {} ({})\n", name, r.status, r.detail));
                    }
                }
            }
        }
        if with_summary {
            let (p, f, i) = self.counts();
            out.push_str(&format!("{} pass / {} fail / {} info\n", p, f, i));
        }
        out
    }
}

/// What a command produced: stdout text, stderr text, exit code.
#[derive(Debug)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn err(code: i32, msg: String) -> Self {
        CmdOutput {
            stdout: String::new(),
            stderr: msg,
            code,
        }
    }
}

/// `tate-rank m d`: a single decimal integer; exit 2 when m does not
/// divide d.
pub fn run_tate_rank(m: u64, d: u64) -> CmdOutput {
    match TateRankInput::new(m, d) {
        Ok(inp) => CmdOutput::ok(format!("{}\n", tate_rank(inp))),
        Err(e) => CmdOutput::err(2, format!("{}\n", e)),
    }
}

/// `weights --power e --factors r`: decomposition table plus the one-dim
/// count and its closed form. Exit 2 when the dimension cap is hit.
pub fn run_weights(power: u32, factors: usize) -> CmdOutput {
    if factors == 0 {
        return CmdOutput::err(2, "factors must be positive\n".to_string());
    }
    let mut p = CharacterPoly::trivial(factors);
    for j in 0..factors {
        let f = match CharacterPoly::std_factor(factors, j).pow(power) {
            Ok(f) => f,
            Err(e) => return CmdOutput::err(2, format!("{}\n", e)),
        };
        p = match p.mul(&f) {
            Ok(p) => p,
            Err(e) => return CmdOutput::err(2, format!("{}\n", e)),
        };
    }
    let dec = match decompose(&p) {
        Ok(d) => d,
        Err(e) => return CmdOutput::err(2, format!("{}\n", e)),
    };
    let mut out = String::new();
    for (hw, mult) in &dec {
        out.push_str(&format!("{}:{}\n", hw, mult));
    }
    let count = one_dim_count(&p).expect("already decomposed");
    let closed: BigUint = if power % 2 == 0 && power > 0 {
        let base = lemma_even_count(power as u64 / 2);
        let mut acc = BigUint::one();
        for _ in 0..factors {
            acc *= &base;
        }
        acc
    } else {
        BigUint::from(0u32)
    };
    let agree = closed == BigUint::from(count);
    out.push_str(&format!(
        "one_dim={} closed_form={} {}\n",
        count,
        closed,
        if agree { "agree" } else { "DISAGREE" }
    ));
    CmdOutput::ok(out)
}

/// `slcheck --ell p --gens "a,b,c,d;..."`: prints `true` or `false`; exit 2
/// on a bad prime or malformed generators.
pub fn run_slcheck(ell: u64, gens: &str) -> CmdOutput {
    let parsed: Result<Vec<[i64; 4]>, String> = gens
        .split(';')
        .map(|m| {
            let vals: Result<Vec<i64>, _> = m.split(',').map(|t| t.trim().parse()).collect();
            match vals {
                Ok(v) if v.len() == 4 => Ok([v[0], v[1], v[2], v[3]]),
                _ => Err(format!("bad generator '{}' (need 4 integers)", m)),
            }
        })
        .collect();
    let gens = match parsed {
        Ok(g) => g,
        Err(msg) => return CmdOutput::err(2, format!("{}\n", msg)),
    };
    match ModlRep::new(ell, gens) {
        Ok(rep) => match rep.sl2_image_check() {
            Ok(b) => CmdOutput::ok(format!("{}\n", b)),
            Err(e) => CmdOutput::err(2, format!("{}\n", e)),
        },
        Err(e) => CmdOutput::err(2, format!("{}\n", e)),
    }
}

/// Asai subcommands over a model fixture file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsaiCommand {
    Induce,
    Stabilizer,
    StableCheck,
    TateCount,
    Descend,
}

/// The induced-degree cap: `ASAI_MAX_DEGREE` overrides the default, hard
/// ceiling 2²⁰.
pub fn degree_cap_from_env() -> u64 {
    std::env::var("ASAI_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
        .map(|v| v.min(HARD_DEGREE_CAP))
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

/// `asai <subcommand> <model-file>`: exit 3 on parse errors (with line
/// number), exit 1 on any failed check.
pub fn run_asai(cmd: AsaiCommand, path: &Path, format: Format, emit: bool, cap: u64) -> CmdOutput {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return CmdOutput::err(3, format!("cannot read {}: {}\n", path.display(), e)),
    };
    let model = match parse_model_fixture(&text) {
        Ok(m) => m,
        Err(e @ Error::Parse { .. }) => return CmdOutput::err(3, format!("{}\n", e)),
        Err(e) => {
            let mut report = RunReport::default();
            report.push("model.build", Status::Fail, e.to_string());
            return CmdOutput {
                stdout: report.render(format, false),
                stderr: String::new(),
                code: 1,
            };
        }
    };
    let mut report = RunReport::default();
    match cmd {
        AsaiCommand::Induce => {
            match model.tensor_induce_capped(cap) {
                Ok(induced) => {
                    report.push(
                        "induce.degree",
                        Status::Info,
                        format!("degree={}", induced.degree()),
                    );
                    report.push("induce.homomorphism", Status::Pass, "");
                    match model.restriction_identity_holds(&induced) {
                        Ok(true) => report.push("induce.restriction_identity", Status::Pass, ""),
                        Ok(false) => report.push("induce.restriction_identity", Status::Fail, ""),
                        Err(e) => {
                            report.push("induce.restriction_identity", Status::Fail, e.to_string())
                        }
                    }
                    if emit {
                        let fixture = render_rep_fixture(&induced, model.group().gen_indices());
                        return CmdOutput::ok(fixture);
                    }
                }
                Err(e) => report.push("induce.build", Status::Fail, e.to_string()),
            }
        }
        AsaiCommand::Stabilizer => match model.stabilizer() {
            Ok(stab) => {
                report.push("stabilizer.m", Status::Info, format!("m={}", stab.m()));
                report.push(
                    "stabilizer.m_divides_d",
                    Status::Pass,
                    format!("m={} d={}", stab.m(), model.d()),
                );
                report.push("stabilizer.closed", Status::Pass, "");
                let cocycle_ok = check_cocycle(&model, &stab);
                match cocycle_ok {
                    Ok(true) => report.push("stabilizer.cocycle", Status::Pass, ""),
                    Ok(false) => report.push("stabilizer.cocycle", Status::Fail, ""),
                    Err(e) => report.push("stabilizer.cocycle", Status::Fail, e.to_string()),
                }
            }
            Err(e) => report.push("stabilizer.build", Status::Fail, e.to_string()),
        },
        AsaiCommand::StableCheck => match model.stabilizer() {
            Ok(stab) => match model.stable_identity_report(&stab) {
                Ok(r) if r.holds => report.push("stable.identity", Status::Pass, ""),
                Ok(r) => {
                    report.push("stable.identity", Status::Fail, "");
                    for d in r.diffs {
                        report.push("stable.diff", Status::Info, d);
                    }
                }
                Err(e) => report.push("stable.identity", Status::Fail, e.to_string()),
            },
            Err(e) => report.push("stable.identity", Status::Fail, e.to_string()),
        },
        AsaiCommand::TateCount => {
            add_tate_count_rows(&model, &mut report);
        }
        AsaiCommand::Descend => {
            add_descend_rows(&model, &mut report, false);
        }
    }
    CmdOutput {
        stdout: report.render(format, false),
        stderr: String::new(),
        code: report.exit_code(),
    }
}

fn check_cocycle(model: &GaloisModel, stab: &crate::asai::StabilizerData) -> crate::Result<bool> {
    let chi = model.rho().character()?;
    for &xi in stab.stab.members() {
        let w = stab.witnesses[xi].as_ref().expect("member has witness");
        let conj_chi = model.conj_rep(stab.quotient.rep_of[xi])?.character()?;
        if chi.mul_linear(w)? != conj_chi {
            return Ok(false);
        }
    }
    Ok(true)
}

fn add_tate_count_rows(model: &GaloisModel, report: &mut RunReport) {
    let stab = match model.stabilizer() {
        Ok(s) => s,
        Err(e) => {
            report.push("tate.stabilizer", Status::Fail, e.to_string());
            return;
        }
    };
    let brute = match model.brute_tate_count(None) {
        Ok(b) => b,
        Err(e) => {
            report.push("tate.count_h", Status::Fail, e.to_string());
            return;
        }
    };
    report.push(
        "tate.count_h",
        Status::Info,
        format!("count={} constituents={}", brute.count, brute.constituents.len()),
    );
    let cmp = model.compare_with_formula(&stab, &brute);
    report.push(
        "tate.formula",
        Status::Info,
        format!(
            "m={} d={} formula={} brute={} agree={} note={}",
            cmp.m, cmp.d, cmp.formula, cmp.brute, cmp.agree, cmp.note
        ),
    );
    if let Some(seeds) = model.subfield_k() {
        match model.brute_tate_count(Some(seeds)) {
            Ok(k) => {
                report.push(
                    "tate.count_k",
                    Status::Info,
                    format!("|K|={} count={}", k.k_order, k.count),
                );
                if k.count >= brute.count {
                    report.push(
                        "tate.monotone",
                        Status::Pass,
                        format!("count_K={} >= count_H={}", k.count, brute.count),
                    );
                } else {
                    report.push(
                        "tate.monotone",
                        Status::Fail,
                        format!("count_K={} < count_H={}", k.count, brute.count),
                    );
                }
            }
            Err(e) => report.push("tate.count_k", Status::Fail, e.to_string()),
        }
    }
}

fn add_descend_rows(model: &GaloisModel, report: &mut RunReport, soft_no_witness: bool) {
    let stab = match model.stabilizer() {
        Ok(s) => s,
        Err(e) => {
            report.push("descend.stabilizer", Status::Fail, e.to_string());
            return;
        }
    };
    match model.twist_to_descend(&stab) {
        Ok(DescentOutcome::Found {
            mu,
            norm_solution,
            verified,
        }) => {
            report.push(
                "descend.outcome",
                Status::Info,
                format!(
                    "mu_found=true trivial={} norm_solution={}",
                    mu.is_trivial(),
                    norm_solution
                ),
            );
            report.push(
                "descend.verified",
                if verified { Status::Pass } else { Status::Fail },
                "character equality of the twist with its conjugate",
            );
        }
        Ok(DescentOutcome::NoSolution { candidates_checked }) => {
            report.push(
                "descend.outcome",
                Status::Info,
                format!("mu_found=false candidates_checked={}", candidates_checked),
            );
            report.push(
                "descend.exhaustive",
                Status::Pass,
                "no character makes the twist conjugation-invariant",
            );
        }
        Err(Error::NoWitness) if soft_no_witness => {
            report.push(
                "descend.outcome",
                Status::Info,
                "skipped: quadratic coset not in the stabilizer",
            );
        }
        Err(e) => report.push("descend.outcome", Status::Fail, e.to_string()),
    }
}

/// `verify <dir>`: run every applicable invariant check over each fixture in
/// the directory, deterministically, and summarize.
pub fn run_verify(dir: &Path, format: Format) -> CmdOutput {
    let mut entries: Vec<std::path::PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                matches!(
                    p.extension().and_then(|e| e.to_str()),
                    Some("group") | Some("model") | Some("modl")
                )
            })
            .collect(),
        Err(e) => return CmdOutput::err(1, format!("cannot read {}: {}\n", dir.display(), e)),
    };
    entries.sort();
    let mut report = RunReport::default();
    for path in &entries {
        let name = path
            .file_name()
            .and_then(|n| n.to_str())
            .unwrap_or("?")
            .to_string();
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                report.push(format!("{}\tread", name), Status::Fail, e.to_string());
                continue;
            }
        };
        match path.extension().and_then(|e| e.to_str()) {
            Some("group") => verify_group_fixture(&name, &text, &mut report),
            Some("model") => verify_model_fixture(&name, &text, &mut report),
            Some("modl") => verify_modl_fixture(&name, &text, &mut report),
            _ => {}
        }
    }
    let stdout = report.render(format, true);
    CmdOutput {
        stdout,
        stderr: String::new(),
        code: report.exit_code(),
    }
}

fn verify_group_fixture(name: &str, text: &str, report: &mut RunReport) {
    let lines: Vec<&str> = text.lines().collect();
    let sec = match parse_group_section(&lines) {
        Ok(s) => s,
        Err(e) => {
            report.push(format!("{}\tparse", name), Status::Fail, e.to_string());
            return;
        }
    };
    let group = match FiniteGroup::from_perm_gens(sec.gen_perms.clone()) {
        Ok(g) => g,
        Err(e) => {
            report.push(format!("{}\tgroup.build", name), Status::Fail, e.to_string());
            return;
        }
    };
    report.push(
        format!("{}\tgroup.build", name),
        Status::Pass,
        format!("order={}", group.order()),
    );
    let classes = group.conjugacy_classes();
    let total: usize = classes.iter().map(|c| c.len()).sum();
    let sizes: Vec<String> = classes.iter().map(|c| c.len().to_string()).collect();
    report.push(
        format!("{}\tgroup.classes", name),
        if total == group.order() { Status::Pass } else { Status::Fail },
        format!("sizes={}", sizes.join(",")),
    );
    match group.linear_characters() {
        Ok(chars) => {
            let mut ok = true;
            for c in &chars {
                if !c.is_multiplicative().unwrap_or(false) {
                    ok = false;
                }
            }
            // orthonormality
            'outer: for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    match inner_product(a, b) {
                        Ok(ip) => {
                            let expect = i64::from(i == j);
                            if ip != crate::exactnum::rat(expect) {
                                ok = false;
                                break 'outer;
                            }
                        }
                        Err(_) => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            // values live in the conductor of the group exponent
            let exponent = group.exponent();
            for c in &chars {
                for e in 0..group.order() {
                    let v = c.value(e).canonicalize();
                    if exponent % v.conductor() != 0 {
                        ok = false;
                    }
                }
            }
            report.push(
                format!("{}\tgroup.linear_characters", name),
                if ok { Status::Pass } else { Status::Fail },
                format!("count={}", chars.len()),
            );
        }
        Err(e) => report.push(
            format!("{}\tgroup.linear_characters", name),
            Status::Fail,
            e.to_string(),
        ),
    }
    if let Some(refs) = &sec.subgroup_gens {
        let seeds: Vec<usize> = refs
            .iter()
            .map(|&r| group.index_of(&sec.gen_perms[r]).expect("generator"))
            .collect();
        let sub = group.subgroup_closure(&seeds);
        let lagrange = group.order() % sub.order() == 0;
        let cosets = group.left_cosets(&sub);
        let partition: usize = cosets.iter().map(|c| c.members.len()).sum();
        let ok = lagrange && partition == group.order() && cosets.len() == group.order() / sub.order();
        report.push(
            format!("{}\tgroup.subgroup", name),
            if ok { Status::Pass } else { Status::Fail },
            format!(
                "order={} cosets={} normal={}",
                sub.order(),
                cosets.len(),
                group.is_normal(&sub)
            ),
        );
    }
}

fn verify_model_fixture(name: &str, text: &str, report: &mut RunReport) {
    verify_group_fixture(name, text, report);
    let model = match parse_model_fixture(text) {
        Ok(m) => m,
        Err(e @ Error::Parse { .. }) => {
            report.push(format!("{}\tmodel.parse", name), Status::Fail, e.to_string());
            return;
        }
        Err(e) => {
            report.push(format!("{}\tmodel.build", name), Status::Fail, e.to_string());
            return;
        }
    };
    report.push(
        format!("{}\tmodel.build", name),
        Status::Pass,
        format!(
            "|G|={} |H|={} d={} degree={}",
            model.group().order(),
            model.subgroup().order(),
            model.d(),
            model.rho().degree()
        ),
    );
    match (
        model.rho().invariant_dim_kernel(),
        model.rho().invariant_dim_char(),
    ) {
        (Ok(a), Ok(b)) => report.push(
            format!("{}\tmodel.invariant_dims", name),
            if a == b { Status::Pass } else { Status::Fail },
            format!("kernel={} char={}", a, b),
        ),
        (a, b) => report.push(
            format!("{}\tmodel.invariant_dims", name),
            Status::Fail,
            format!("{:?} vs {:?}", a, b),
        ),
    }
    let induced = match model.tensor_induce_capped(degree_cap_from_env()) {
        Ok(i) => i,
        Err(e) => {
            report.push(format!("{}\tmodel.induce", name), Status::Fail, e.to_string());
            return;
        }
    };
    report.push(
        format!("{}\tmodel.induce", name),
        Status::Pass,
        format!("degree={}", induced.degree()),
    );
    match model.restriction_identity_holds(&induced) {
        Ok(true) => report.push(format!("{}\tmodel.restriction", name), Status::Pass, ""),
        Ok(false) => report.push(format!("{}\tmodel.restriction", name), Status::Fail, ""),
        Err(e) => report.push(format!("{}\tmodel.restriction", name), Status::Fail, e.to_string()),
    }
    let stab = match model.stabilizer() {
        Ok(s) => s,
        Err(e) => {
            report.push(format!("{}\tmodel.stabilizer", name), Status::Fail, e.to_string());
            return;
        }
    };
    report.push(
        format!("{}\tmodel.stabilizer", name),
        Status::Info,
        format!("m={}", stab.m()),
    );
    match check_cocycle(&model, &stab) {
        Ok(true) => report.push(format!("{}\tmodel.cocycle", name), Status::Pass, ""),
        Ok(false) => report.push(format!("{}\tmodel.cocycle", name), Status::Fail, ""),
        Err(e) => report.push(format!("{}\tmodel.cocycle", name), Status::Fail, e.to_string()),
    }
    match model.stable_identity_report(&stab) {
        Ok(r) if r.holds => report.push(format!("{}\tmodel.stable", name), Status::Pass, ""),
        Ok(r) => report.push(
            format!("{}\tmodel.stable", name),
            Status::Fail,
            r.diffs.join("; "),
        ),
        Err(e) => report.push(format!("{}\tmodel.stable", name), Status::Fail, e.to_string()),
    }
    {
        // scoped so the tate rows group with the model rows
        let mut sub = RunReport::default();
        add_tate_count_rows(&model, &mut sub);
        for row in sub.rows {
            report.push(format!("{}\t{}", name, row.name), row.status, row.detail);
        }
    }
    if model.d() == 2 {
        let mut sub = RunReport::default();
        add_descend_rows(&model, &mut sub, true);
        for row in sub.rows {
            report.push(format!("{}\t{}", name, row.name), row.status, row.detail);
        }
    }
}

fn verify_modl_fixture(name: &str, text: &str, report: &mut RunReport) {
    match parse_modl_fixture(text) {
        Ok(rep) => {
            report.push(
                format!("{}\tmodl.build", name),
                Status::Pass,
                format!("ell={}", rep.ell()),
            );
            match rep.closure() {
                Ok(c) => {
                    report.push(
                        format!("{}\tmodl.closure", name),
                        Status::Info,
                        format!("order={}", c.len()),
                    );
                    match rep.sl2_image_check() {
                        Ok(b) => report.push(
                            format!("{}\tmodl.sl2", name),
                            Status::Info,
                            format!("{}", b),
                        ),
                        Err(e) => report.push(
                            format!("{}\tmodl.sl2", name),
                            Status::Fail,
                            e.to_string(),
                        ),
                    }
                }
                Err(e) => report.push(
                    format!("{}\tmodl.closure", name),
                    Status::Fail,
                    e.to_string(),
                ),
            }
        }
        Err(e) => report.push(format!("{}\tmodl.build", name), Status::Fail, e.to_string()),
    }
}

/// Pretty helper shared by examples: short description of a cyclotomic
/// value (canonical form).
pub fn describe_value(v: &CyclotomicNumber) -> String {
    v.canonicalize().to_string()
}
