//! The four subcommands: det, counts, bench and plan.

use crate::io::{self, MatrixFile};
use crate::records::{digest, render, BenchRecord, OutputFormat};
use crate::rings::{BaseSpec, RingSpec};
use exact_det::complexity::{
    auto_switch_point, counts_combined_effective, counts_dodgson, counts_one_pass, modular_mu,
    CountTriple,
};
use exact_det::modular::{
    coeff_bound_poly, det_modular_int, det_modular_poly, hadamard_bound, plan_moduli,
};
use exact_det::{
    det_combined, det_dodgson, det_dodgson_rect, det_one_pass, BigIntRing, DetResult,
    MachineIntRing, Matrix, PolyRing, PrimeFieldRing, Ring,
};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub enum CliError {
    /// Bad input: file contents, dimensions, flags. Exit code 2.
    Input(String),
    /// Arithmetic-mode failure (machine-word overflow). Exit code 3.
    Arithmetic(String),
    /// Internal invariant violation. Exit code 4.
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Arithmetic(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Arithmetic(m) => write!(f, "arithmetic error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<exact_det::Error> for CliError {
    fn from(e: exact_det::Error) -> Self {
        use exact_det::Error as E;
        match e {
            E::Overflow => CliError::Arithmetic(e.to_string()),
            E::InexactDivision | E::ReconstructionMismatch => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgoChoice {
    Dodgson,
    OnePass,
    Combined,
    Modular,
}

impl AlgoChoice {
    fn name(&self) -> &'static str {
        match self {
            AlgoChoice::Dodgson => "dodgson",
            AlgoChoice::OnePass => "one-pass",
            AlgoChoice::Combined => "combined",
            AlgoChoice::Modular => "modular",
        }
    }
}

/// Expands the selector; the bool reports whether `all` was used (then
/// unsupported ring/algorithm combinations are skipped instead of rejected).
pub fn parse_algos(text: &str) -> Result<(Vec<AlgoChoice>, bool), CliError> {
    match text {
        "all" => Ok((
            vec![AlgoChoice::Dodgson, AlgoChoice::OnePass, AlgoChoice::Combined, AlgoChoice::Modular],
            true,
        )),
        "dodgson" => Ok((vec![AlgoChoice::Dodgson], false)),
        "one-pass" => Ok((vec![AlgoChoice::OnePass], false)),
        "combined" => Ok((vec![AlgoChoice::Combined], false)),
        "modular" => Ok((vec![AlgoChoice::Modular], false)),
        other => Err(CliError::Input(format!(
            "unknown algorithm '{other}' (expected dodgson, one-pass, combined, modular or all)"
        ))),
    }
}

#[derive(Clone, Copy, Debug)]
pub enum RArg {
    Auto,
    Fixed(usize),
}

pub fn parse_r(text: &str) -> Result<RArg, CliError> {
    if text == "auto" {
        return Ok(RArg::Auto);
    }
    text.parse()
        .map(RArg::Fixed)
        .map_err(|_| CliError::Input(format!("bad switch point '{text}' (expected integer or auto)")))
}

fn resolve_r(r: RArg, n: usize) -> usize {
    match r {
        RArg::Auto => auto_switch_point(n as u64) as usize,
        RArg::Fixed(k) => k,
    }
}

pub fn parse_pool(text: &Option<String>) -> Result<Option<Vec<u64>>, CliError> {
    match text {
        None => Ok(None),
        Some(t) => t
            .split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|_| {
                CliError::Input(format!("bad prime '{x}' in pool"))
            }))
            .collect::<Result<Vec<u64>, _>>()
            .map(Some),
    }
}

fn write_stream(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------- det ----

fn bigint_to_i64(v: &BigInt) -> Result<i64, CliError> {
    v.to_i64()
        .ok_or_else(|| CliError::Input(format!("entry {v} does not fit the machine-int ring")))
}

fn int_matrix_bigint(n: usize, m: usize, entries: &[BigInt]) -> Result<Matrix<BigIntRing>, CliError> {
    Ok(Matrix::new(BigIntRing, n, m, entries.to_vec())?)
}

fn int_matrix_machine(
    n: usize,
    m: usize,
    entries: &[BigInt],
) -> Result<Matrix<MachineIntRing>, CliError> {
    let converted: Result<Vec<i64>, CliError> = entries.iter().map(bigint_to_i64).collect();
    Ok(Matrix::new(MachineIntRing, n, m, converted?)?)
}

fn int_matrix_field(
    n: usize,
    m: usize,
    entries: &[BigInt],
    modulus: u64,
) -> Result<Matrix<PrimeFieldRing>, CliError> {
    let field = PrimeFieldRing::new(modulus)?;
    let reduced: Vec<u64> = entries.iter().map(|v| field.reduce_bigint(v)).collect();
    Ok(Matrix::new(field, n, m, reduced)?)
}

fn poly_matrix_bigint(
    n: usize,
    m: usize,
    s: usize,
    entries: &[Vec<(BigInt, Vec<usize>)>],
) -> Result<Matrix<PolyRing<BigIntRing>>, CliError> {
    let ring = PolyRing::new(BigIntRing, s);
    let polys: Result<Vec<_>, exact_det::Error> =
        entries.iter().map(|terms| ring.from_terms(terms)).collect();
    Ok(Matrix::new(ring, n, m, polys?)?)
}

fn poly_matrix_field(
    n: usize,
    m: usize,
    s: usize,
    entries: &[Vec<(BigInt, Vec<usize>)>],
    modulus: u64,
) -> Result<Matrix<PolyRing<PrimeFieldRing>>, CliError> {
    let field = PrimeFieldRing::new(modulus)?;
    let ring = PolyRing::new(field, s);
    let polys: Result<Vec<_>, exact_det::Error> = entries
        .iter()
        .map(|terms| {
            let reduced: Vec<(u64, Vec<usize>)> =
                terms.iter().map(|(c, e)| (field.reduce_bigint(c), e.clone())).collect();
            ring.from_terms(&reduced)
        })
        .collect();
    Ok(Matrix::new(ring, n, m, polys?)?)
}

/// Runs one direct (non-modular) algorithm on a square matrix.
fn run_direct<R: Ring>(
    mat: &Matrix<R>,
    algo: AlgoChoice,
    r_arg: RArg,
) -> Result<DetResult<R>, CliError> {
    Ok(match algo {
        AlgoChoice::Dodgson => det_dodgson(mat)?,
        AlgoChoice::OnePass => det_one_pass(mat)?,
        AlgoChoice::Combined => det_combined(mat, resolve_r(r_arg, mat.rows()))?,
        AlgoChoice::Modular => unreachable!("modular handled by the caller"),
    })
}

pub fn run_det(
    file: &Path,
    algo: &str,
    r: &str,
    ring: &Option<String>,
    pool: &Option<String>,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", file.display())))?;
    let parsed = io::parse_matrix(&text).map_err(CliError::Input)?;
    let (mut algos, all_mode) = parse_algos(algo)?;
    let rectangular = match &parsed {
        MatrixFile::Int { n, m, .. } | MatrixFile::Poly { n, m, .. } => n != m,
    };
    if rectangular && all_mode {
        // only condensation has a rectangular extension
        algos.retain(|a| *a == AlgoChoice::Dodgson);
    }
    let r_arg = parse_r(r)?;
    let pool = parse_pool(pool)?;
    let pool_ref = pool.as_deref();

    let spec = match ring {
        Some(t) => RingSpec::parse(t).map_err(CliError::Input)?,
        None => match &parsed {
            MatrixFile::Int { .. } => RingSpec::BigInt,
            MatrixFile::Poly { s, p, .. } => RingSpec::Poly { s: *s, p: *p, base: BaseSpec::BigInt },
        },
    };

    let mut lines: Vec<String> = Vec::new();
    match (&parsed, spec) {
        (MatrixFile::Int { n, m, entries }, RingSpec::Int) => {
            let mat = int_matrix_machine(*n, *m, entries)?;
            for &a in &algos {
                if a == AlgoChoice::Modular {
                    let big = int_matrix_bigint(*n, *m, entries)?;
                    lines.push(modular_int_line(&big, pool_ref)?);
                } else if mat.is_square() {
                    let res = run_direct(&mat, a, r_arg)?;
                    lines.push(mat.ring().text(&res.value));
                } else {
                    lines.push(rect_line(&mat, a)?);
                }
            }
        }
        (MatrixFile::Int { n, m, entries }, RingSpec::BigInt) => {
            let mat = int_matrix_bigint(*n, *m, entries)?;
            for &a in &algos {
                if a == AlgoChoice::Modular {
                    lines.push(modular_int_line(&mat, pool_ref)?);
                } else if mat.is_square() {
                    let res = run_direct(&mat, a, r_arg)?;
                    lines.push(mat.ring().text(&res.value));
                } else {
                    lines.push(rect_line(&mat, a)?);
                }
            }
        }
        (MatrixFile::Int { n, m, entries }, RingSpec::PrimeField(modulus)) => {
            let mat = int_matrix_field(*n, *m, entries, modulus)?;
            for &a in &algos {
                if a == AlgoChoice::Modular {
                    if all_mode {
                        continue; // residues are already modular
                    }
                    return Err(CliError::Input(
                        "the modular pipeline needs integer or polynomial input, not residues".into(),
                    ));
                }
                if mat.is_square() {
                    let res = run_direct(&mat, a, r_arg)?;
                    lines.push(mat.ring().text(&res.value));
                } else {
                    lines.push(rect_line(&mat, a)?);
                }
            }
        }
        (MatrixFile::Int { n, m, entries }, RingSpec::Poly { s, base, .. }) => {
            // integers embedded as constants
            let terms: Vec<Vec<(BigInt, Vec<usize>)>> =
                entries.iter().map(|v| vec![(v.clone(), vec![0; s])]).collect();
            run_det_poly(&mut lines, *n, *m, s, &terms, base, &algos, all_mode, r_arg, pool_ref)?;
        }
        (MatrixFile::Poly { n, m, s, entries, .. }, RingSpec::Poly { s: rs, base, .. }) => {
            if rs != *s {
                return Err(CliError::Input(format!(
                    "ring has {rs} variables but the file declares {s}"
                )));
            }
            run_det_poly(&mut lines, *n, *m, *s, entries, base, &algos, all_mode, r_arg, pool_ref)?;
        }
        (MatrixFile::Poly { .. }, _) => {
            return Err(CliError::Input(
                "polynomial files need a polynomial ring (poly:<s>,<p>[:<base>])".into(),
            ));
        }
    }

    for line in lines {
        println!("{line}");
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_det_poly(
    lines: &mut Vec<String>,
    n: usize,
    m: usize,
    s: usize,
    entries: &[Vec<(BigInt, Vec<usize>)>],
    base: BaseSpec,
    algos: &[AlgoChoice],
    all_mode: bool,
    r_arg: RArg,
    pool: Option<&[u64]>,
) -> Result<(), CliError> {
    match base {
        BaseSpec::BigInt | BaseSpec::Int => {
            let mat = poly_matrix_bigint(n, m, s, entries)?;
            for &a in algos {
                if a == AlgoChoice::Modular {
                    let report = det_modular_poly(&mat, pool)?;
                    lines.push(mat.ring().text(&report.value));
                } else if mat.is_square() {
                    let res = run_direct(&mat, a, r_arg)?;
                    lines.push(mat.ring().text(&res.value));
                } else {
                    lines.push(rect_line(&mat, a)?);
                }
            }
        }
        BaseSpec::PrimeField(modulus) => {
            let mat = poly_matrix_field(n, m, s, entries, modulus)?;
            for &a in algos {
                if a == AlgoChoice::Modular {
                    if all_mode {
                        continue;
                    }
                    return Err(CliError::Input(
                        "the modular pipeline needs integer coefficients, not residues".into(),
                    ));
                }
                if mat.is_square() {
                    let res = run_direct(&mat, a, r_arg)?;
                    lines.push(mat.ring().text(&res.value));
                } else {
                    lines.push(rect_line(&mat, a)?);
                }
            }
        }
    }
    Ok(())
}

fn modular_int_line(mat: &Matrix<BigIntRing>, pool: Option<&[u64]>) -> Result<String, CliError> {
    let report = det_modular_int(mat, pool)?;
    Ok(mat.ring().text(&report.value))
}

/// Rectangular input: condensation reports the determinant of the leading
/// columns followed by each substituted minor, space separated.
fn rect_line<R: Ring>(mat: &Matrix<R>, algo: AlgoChoice) -> Result<String, CliError> {
    if algo != AlgoChoice::Dodgson {
        return Err(CliError::Input(format!(
            "rectangular input is supported by the dodgson algorithm only, not {}",
            algo.name()
        )));
    }
    let res = det_dodgson_rect(mat)?;
    Ok(res.values.iter().map(|v| mat.ring().text(v)).collect::<Vec<_>>().join(" "))
}

// ------------------------------------------------------------- counts ----

fn formula_for(algo: AlgoChoice, n: u64, r: Option<u64>) -> Option<CountTriple> {
    match algo {
        AlgoChoice::Dodgson => counts_dodgson(n).ok(),
        AlgoChoice::OnePass => counts_one_pass(n).ok(),
        AlgoChoice::Combined => counts_combined_effective(n, r?).ok(),
        AlgoChoice::Modular => None,
    }
}

fn record_from_run<R: Ring>(
    mat: &Matrix<R>,
    res: &DetResult<R>,
    algo: AlgoChoice,
    seed: u64,
    ring_desc: &str,
    wall_time_ns: u128,
) -> BenchRecord {
    let n = mat.rows() as u64;
    let r_used = res.switch_r.map(|r| r as u64);
    let formula = formula_for(algo, n, r_used);
    BenchRecord {
        algorithm: algo.name().into(),
        n: mat.rows(),
        r: res.switch_r,
        seed,
        ring: ring_desc.into(),
        n_mul: res.tally.n_mul,
        n_div: res.tally.n_div,
        n_add: res.tally.n_add,
        c_mul: res.tally.c_mul,
        c_div: res.tally.c_div,
        c_add: res.tally.c_add,
        formula_n_mul: formula.map(|c| c.n_mul),
        formula_n_div: formula.map(|c| c.n_div),
        formula_n_add: formula.map(|c| c.n_add),
        wall_time_ns,
        result_digest: digest(&mat.ring().text(&res.value)),
    }
}

pub fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => {
            let lo = a.parse().map_err(|_| CliError::Input(format!("bad range start '{a}'")))?;
            let hi = b.parse().map_err(|_| CliError::Input(format!("bad range end '{b}'")))?;
            (lo, hi)
        }
        None => {
            let v = text.parse().map_err(|_| CliError::Input(format!("bad size '{text}'")))?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::Input(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn pivot_free_matrix(n: usize, rng: &mut ChaCha8Rng) -> Result<Matrix<BigIntRing>, CliError> {
    // the three algorithms pivot under the same condition (a vanishing
    // corner minor of order < n), so checking one of them suffices
    for _ in 0..32 {
        let mat = Matrix::random(BigIntRing, n, n, rng, 99)?;
        if !det_dodgson(&mat)?.pivoted() {
            return Ok(mat);
        }
    }
    Err(CliError::Internal(format!("pivot-event resample limit exceeded at n = {n}")))
}

#[allow(clippy::too_many_arguments)]
pub fn run_counts(
    n_range: &str,
    algo: &str,
    r_mode: &str,
    seed: u64,
    format: OutputFormat,
    timings: bool,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let (lo, hi) = parse_range(n_range)?;
    if lo < 3 || hi > 64 {
        return Err(CliError::Input(format!("counts range must lie in [3, 64], got {lo}..{hi}")));
    }
    let (algos, _) = parse_algos(algo)?;
    if algos.contains(&AlgoChoice::Modular) && algos.len() == 1 {
        return Err(CliError::Input(
            "counts compares against the closed forms; the modular pipeline has none".into(),
        ));
    }

    let mut records = Vec::new();
    for n in lo..=hi {
        let n_seed = seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        let mut rng = ChaCha8Rng::seed_from_u64(n_seed);
        let mat = pivot_free_matrix(n, &mut rng)?;
        for &a in &algos {
            match a {
                AlgoChoice::Modular => continue,
                AlgoChoice::Combined => {
                    if n < 4 {
                        continue;
                    }
                    let rs: Vec<usize> = match r_mode {
                        "all" => (2..=n - 2).collect(),
                        "auto" => vec![auto_switch_point(n as u64) as usize],
                        k => vec![k.parse().map_err(|_| {
                            CliError::Input(format!("bad switch point '{k}' (integer, auto or all)"))
                        })?],
                    };
                    for r in rs {
                        let t0 = Instant::now();
                        let res = det_combined(&mat, r)?;
                        let wall = if timings { t0.elapsed().as_nanos() } else { 0 };
                        records.push(record_from_run(&mat, &res, a, n_seed, "bigint", wall));
                    }
                }
                direct => {
                    let t0 = Instant::now();
                    let res = run_direct(&mat, direct, RArg::Auto)?;
                    let wall = if timings { t0.elapsed().as_nanos() } else { 0 };
                    records.push(record_from_run(&mat, &res, direct, n_seed, "bigint", wall));
                }
            }
        }
    }

    let mismatches = records.iter().filter(|r| !r.matches_formula()).count();
    let status = if mismatches == 0 {
        "EXACT MATCH".to_string()
    } else {
        format!("MISMATCH ({mismatches} rows)")
    };
    let mut rendered = render(&records, format);
    if format == OutputFormat::Table {
        rendered.push_str(&status);
        rendered.push('\n');
    } else {
        eprintln!("{status}");
    }
    write_stream(out, &rendered)?;
    if mismatches > 0 {
        return Err(CliError::Internal(format!(
            "{mismatches} rows disagree with the closed-form counts"
        )));
    }
    Ok(())
}

// -------------------------------------------------------------- bench ----

pub struct BenchConfig {
    pub n: usize,
    pub m: usize,
    pub algo: String,
    pub ring: String,
    pub seed: u64,
    pub reps: usize,
    pub r: String,
    pub entry_bound: i64,
    pub format: OutputFormat,
    pub timings: bool,
    pub out: Option<PathBuf>,
    pub prime_pool: Option<String>,
}

pub fn run_bench(cfg: &BenchConfig) -> Result<(), CliError> {
    let spec = RingSpec::parse(&cfg.ring).map_err(CliError::Input)?;
    let (algos, all_mode) = parse_algos(&cfg.algo)?;
    let r_arg = parse_r(&cfg.r)?;
    let pool = parse_pool(&cfg.prime_pool)?;
    let desc = spec.descriptor();
    if cfg.m != cfg.n && algos.iter().any(|a| *a != AlgoChoice::Dodgson) {
        return Err(CliError::Input(
            "rectangular benchmarks support the dodgson algorithm only".into(),
        ));
    }

    let mut records = Vec::new();
    for rep in 0..cfg.reps {
        let rep_seed = cfg.seed.wrapping_add(rep as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(rep_seed);
        match spec {
            RingSpec::Int => {
                let mat = Matrix::random(MachineIntRing, cfg.n, cfg.m, &mut rng, cfg.entry_bound)?;
                for &a in &algos {
                    if a == AlgoChoice::Modular {
                        if cfg.m != cfg.n {
                            continue;
                        }
                        let big = mat.map(BigIntRing, |&v| BigInt::from(v));
                        records.push(modular_record(&big, rep_seed, &desc, cfg.timings, pool.as_deref())?);
                    } else {
                        records.push(bench_direct(&mat, a, r_arg, rep_seed, &desc, cfg.timings)?);
                    }
                }
            }
            RingSpec::BigInt => {
                let mat = Matrix::random(BigIntRing, cfg.n, cfg.m, &mut rng, cfg.entry_bound)?;
                for &a in &algos {
                    if a == AlgoChoice::Modular {
                        if cfg.m != cfg.n {
                            continue;
                        }
                        records.push(modular_record(&mat, rep_seed, &desc, cfg.timings, pool.as_deref())?);
                    } else {
                        records.push(bench_direct(&mat, a, r_arg, rep_seed, &desc, cfg.timings)?);
                    }
                }
            }
            RingSpec::PrimeField(modulus) => {
                let field = PrimeFieldRing::new(modulus)?;
                let mat = Matrix::random(field, cfg.n, cfg.m, &mut rng, 0)?;
                for &a in &algos {
                    if a == AlgoChoice::Modular {
                        if all_mode {
                            continue;
                        }
                        return Err(CliError::Input(
                            "the modular pipeline needs integer or polynomial rings".into(),
                        ));
                    }
                    records.push(bench_direct(&mat, a, r_arg, rep_seed, &desc, cfg.timings)?);
                }
            }
            RingSpec::Poly { s, p, base } => match base {
                BaseSpec::Int | BaseSpec::BigInt => {
                    let ring = PolyRing::new(BigIntRing, s);
                    let mat = Matrix::from_rows(
                        ring,
                        (0..cfg.n)
                            .map(|_| {
                                (0..cfg.m)
                                    .map(|_| ring.sample_dense(&mut rng, p, cfg.entry_bound))
                                    .collect()
                            })
                            .collect(),
                    )?;
                    for &a in &algos {
                        if a == AlgoChoice::Modular {
                            if cfg.m != cfg.n {
                                continue;
                            }
                            records.push(modular_poly_record(&mat, rep_seed, &desc, cfg.timings, pool.as_deref())?);
                        } else {
                            records.push(bench_direct(&mat, a, r_arg, rep_seed, &desc, cfg.timings)?);
                        }
                    }
                }
                BaseSpec::PrimeField(modulus) => {
                    let field = PrimeFieldRing::new(modulus)?;
                    let ring = PolyRing::new(field, s);
                    let mat = Matrix::from_rows(
                        ring,
                        (0..cfg.n)
                            .map(|_| (0..cfg.m).map(|_| ring.sample_dense(&mut rng, p, 0)).collect())
                            .collect(),
                    )?;
                    for &a in &algos {
                        if a == AlgoChoice::Modular {
                            if all_mode {
                                continue;
                            }
                            return Err(CliError::Input(
                                "the modular pipeline needs integer coefficients".into(),
                            ));
                        }
                        records.push(bench_direct(&mat, a, r_arg, rep_seed, &desc, cfg.timings)?);
                    }
                }
            },
        }
    }

    write_stream(&cfg.out, &render(&records, cfg.format))
}

fn bench_direct<R: Ring>(
    mat: &Matrix<R>,
    algo: AlgoChoice,
    r_arg: RArg,
    seed: u64,
    ring_desc: &str,
    timings: bool,
) -> Result<BenchRecord, CliError> {
    if !mat.is_square() {
        let t0 = Instant::now();
        let res = det_dodgson_rect(mat)?;
        let wall = if timings { t0.elapsed().as_nanos() } else { 0 };
        let text =
            res.values.iter().map(|v| mat.ring().text(v)).collect::<Vec<_>>().join(" ");
        return Ok(BenchRecord {
            algorithm: "dodgson".into(),
            n: mat.rows(),
            r: None,
            seed,
            ring: ring_desc.into(),
            n_mul: res.tally.n_mul,
            n_div: res.tally.n_div,
            n_add: res.tally.n_add,
            c_mul: res.tally.c_mul,
            c_div: res.tally.c_div,
            c_add: res.tally.c_add,
            formula_n_mul: None,
            formula_n_div: None,
            formula_n_add: None,
            wall_time_ns: wall,
            result_digest: digest(&text),
        });
    }
    let t0 = Instant::now();
    let res = run_direct(mat, algo, r_arg)?;
    let wall = if timings { t0.elapsed().as_nanos() } else { 0 };
    Ok(record_from_run(mat, &res, algo, seed, ring_desc, wall))
}

fn modular_record(
    mat: &Matrix<BigIntRing>,
    seed: u64,
    ring_desc: &str,
    timings: bool,
    pool: Option<&[u64]>,
) -> Result<BenchRecord, CliError> {
    let t0 = Instant::now();
    let report = det_modular_int(mat, pool)?;
    let wall = if timings { t0.elapsed().as_nanos() } else { 0 };
    eprintln!(
        "modular conversion ops (excluded from the record): n_mul={} n_div={} n_add={} c_mul={} c_div={} c_add={}",
        report.conversion_tally.n_mul,
        report.conversion_tally.n_div,
        report.conversion_tally.n_add,
        report.conversion_tally.c_mul,
        report.conversion_tally.c_div,
        report.conversion_tally.c_add,
    );
    Ok(BenchRecord {
        algorithm: "modular".into(),
        n: mat.rows(),
        r: None,
        seed,
        ring: ring_desc.into(),
        n_mul: report.det_tally.n_mul,
        n_div: report.det_tally.n_div,
        n_add: report.det_tally.n_add,
        c_mul: report.det_tally.c_mul,
        c_div: report.det_tally.c_div,
        c_add: report.det_tally.c_add,
        formula_n_mul: None,
        formula_n_div: None,
        formula_n_add: None,
        wall_time_ns: wall,
        result_digest: digest(&mat.ring().text(&report.value)),
    })
}

fn modular_poly_record(
    mat: &Matrix<PolyRing<BigIntRing>>,
    seed: u64,
    ring_desc: &str,
    timings: bool,
    pool: Option<&[u64]>,
) -> Result<BenchRecord, CliError> {
    let t0 = Instant::now();
    let report = det_modular_poly(mat, pool)?;
    let wall = if timings { t0.elapsed().as_nanos() } else { 0 };
    eprintln!(
        "modular conversion ops (excluded from the record): n_mul={} n_div={} n_add={} c_mul={} c_div={} c_add={}",
        report.conversion_tally.n_mul,
        report.conversion_tally.n_div,
        report.conversion_tally.n_add,
        report.conversion_tally.c_mul,
        report.conversion_tally.c_div,
        report.conversion_tally.c_add,
    );
    Ok(BenchRecord {
        algorithm: "modular".into(),
        n: mat.rows(),
        r: None,
        seed,
        ring: ring_desc.into(),
        n_mul: report.det_tally.n_mul,
        n_div: report.det_tally.n_div,
        n_add: report.det_tally.n_add,
        c_mul: report.det_tally.c_mul,
        c_div: report.det_tally.c_div,
        c_add: report.det_tally.c_add,
        formula_n_mul: None,
        formula_n_div: None,
        formula_n_add: None,
        wall_time_ns: wall,
        result_digest: digest(&mat.ring().text(&report.value)),
    })
}

// --------------------------------------------------------------- plan ----

pub struct PlanArgs {
    pub file: Option<PathBuf>,
    pub n: Option<u64>,
    pub s: Option<u64>,
    pub p: Option<u64>,
    pub l: Option<u64>,
    pub word_bits: u32,
    pub prime_pool: Option<String>,
}

pub fn run_plan(args: &PlanArgs) -> Result<(), CliError> {
    let pool = parse_pool(&args.prime_pool)?;
    let pool_ref = pool.as_deref();

    let (bound, degree_bounds, mu_params) = match &args.file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            match io::parse_matrix(&text).map_err(CliError::Input)? {
                MatrixFile::Int { n, m, entries } => {
                    let mat = int_matrix_bigint(n, m, &entries)?;
                    (hadamard_bound(&mat)?, Vec::new(), None)
                }
                MatrixFile::Poly { n, m, s, entries, .. } => {
                    let mat = poly_matrix_bigint(n, m, s, &entries)?;
                    let bound = coeff_bound_poly(&mat)?;
                    let p_cap = entries
                        .iter()
                        .flat_map(|terms| terms.iter().flat_map(|(_, e)| e.iter().copied()))
                        .max()
                        .unwrap_or(0);
                    let max_coeff_bits = entries
                        .iter()
                        .flat_map(|terms| terms.iter().map(|(c, _)| c.bits()))
                        .max()
                        .unwrap_or(1);
                    let l = args
                        .l
                        .unwrap_or_else(|| max_coeff_bits.div_ceil(args.word_bits as u64).max(1));
                    (
                        bound,
                        vec![n * p_cap; s],
                        Some((n as u64, s as u64, p_cap as u64, l)),
                    )
                }
            }
        }
        None => {
            let (n, s, p, l) = match (args.n, args.s, args.p, args.l) {
                (Some(n), Some(s), Some(p), Some(l)) => (n, s, p, l),
                _ => {
                    return Err(CliError::Input(
                        "plan needs either --file or all of --n, --s, --p, --l".into(),
                    ))
                }
            };
            // largest magnitude representable in l words of word_bits bits
            let max_coeff = (BigInt::one() << (l * args.word_bits as u64)) - 1;
            let mut factorial = BigInt::one();
            for k in 2..=n {
                factorial *= BigInt::from(k);
            }
            let mut bound = factorial;
            for _ in 0..n {
                bound *= &max_coeff;
            }
            for _ in 0..s * n.saturating_sub(1) {
                bound *= BigInt::from(p + 1);
            }
            let degree_bounds = vec![(n * p) as usize; s as usize];
            (bound, degree_bounds, Some((n, s, p, l)))
        }
    };

    let plan = plan_moduli(&bound, &degree_bounds, pool_ref)?;
    println!("coefficient bound: {}", plan.coefficient_bound);
    println!(
        "primes ({}): {}",
        plan.primes.len(),
        plan.primes.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
    );
    println!("points per variable: {:?}", plan.points_per_variable);
    println!("degree bounds: {:?}", plan.degree_bounds);
    match mu_params {
        Some((n, s, p, l)) if s >= 1 && p >= 1 => {
            let mu = modular_mu(n, s, p, l, args.word_bits)?;
            println!("asymptotic mu estimate (word_bits={}): {mu}", args.word_bits);
        }
        _ => println!("asymptotic mu estimate: n/a (needs s >= 1)"),
    }
    Ok(())
}
