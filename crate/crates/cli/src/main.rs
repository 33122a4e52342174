//! Single-binary CLI over the S-unit / S-Diophantine toolkit.
//!
//! Every command writes machine-readable JSON lines to stdout: each record
//! carries "cmd" and "ok" plus a command-specific payload, in a fixed field
//! order, byte-stable across runs. Exit codes: 0 on success, 1 on a domain
//! negative (not smooth, verification failed, no relation), 2 on usage
//! errors. `--progress` writes human-readable notes to stderr only.

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;
use sdioph::polyarith::{
    check_theorem_hypotheses, clear_denominators, lagrange_interpolate, IntPoly, RatPoly,
};
use sdioph::prooflab::{
    audit_odd_roots, build_curve_from_parts, combine_dependences, detect_dependence,
    gcd_probe_mode, normalize_mod3, AuditVerdict, DependenceOutcome, DependenceRelation,
    FamilyParam, DEFAULT_PROBE_EPSILON,
};
use sdioph::search::{
    pairs_from_values_mode, search_tuples_mode, verify_tuple_mode, SearchConfig, TupleRecord,
    VerifyError,
};
use sdioph::sunit::{factor_smooth, PrimeSet, SRational, SmoothStream, SUnit};
use sdioph::ExecMode;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "sdioph", version, about = "S-unit and S-Diophantine tuple computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PrimeArgs {
    /// Comma-separated primes, e.g. "2,3,193"
    #[arg(long)]
    primes: Option<String>,
    /// File with one prime per line
    #[arg(long, value_name = "PATH")]
    primes_file: Option<String>,
}

impl PrimeArgs {
    fn load(&self) -> Result<PrimeSet, String> {
        match (&self.primes, &self.primes_file) {
            (Some(csv), None) => PrimeSet::parse(csv).map_err(|e| e.to_string()),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {path}: {e}"))?;
                PrimeSet::parse_lines(&text).map_err(|e| e.to_string())
            }
            _ => Err("exactly one of --primes or --primes-file is required".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Factor an integer over the prime set
    Smooth {
        #[command(flatten)]
        primes: PrimeArgs,
        /// The integer to factor
        #[arg(long)]
        n: String,
    },
    /// List all S-smooth integers up to a bound, ascending
    Enumerate {
        #[command(flatten)]
        primes: PrimeArgs,
        #[arg(long)]
        bound: String,
        /// Report progress on stderr
        #[arg(long)]
        progress: bool,
    },
    /// Search for n-tuples whose pairwise products are f(s) at S-units s
    Search {
        #[command(flatten)]
        primes: PrimeArgs,
        /// Ascending coefficients, constant first (f = X-1 is "-1,1")
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Tuple size n ≥ 2
        #[arg(long)]
        size: usize,
        /// Largest allowed tuple entry
        #[arg(long)]
        bound: String,
        /// Require strictly increasing values
        #[arg(long)]
        strict: bool,
        /// Drop tuples with two or more entries equal to 1
        #[arg(long)]
        exclude_trivial: bool,
        /// Worker threads (1 = sequential; affects speed only)
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Report progress on stderr
        #[arg(long)]
        progress: bool,
    },
    /// Verify a candidate tuple and print its witness matrix
    Verify {
        #[command(flatten)]
        primes: PrimeArgs,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Comma-separated values, non-decreasing
        #[arg(long)]
        tuple: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// All pairs a ≤ b ≤ bound with a·b = f(s) for an S-unit s
    Pairs {
        #[command(flatten)]
        primes: PrimeArgs,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        bound: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Interpolate a polynomial realizing a triple at given nodes and clear
    /// denominators
    Construct {
        /// The triple a,b,c
        #[arg(long)]
        tuple: String,
        /// Distinct nodes u,v,w
        #[arg(long)]
        units: String,
    },
    /// Check the finiteness-theorem hypotheses of a polynomial
    CheckPoly {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Detect the multiplicative relation v^k·w^l = g behind a pair family
    Dependence {
        #[command(flatten)]
        primes: PrimeArgs,
        /// Pairs "v:w" separated by commas, e.g. "2:4,8:32,32:256"
        #[arg(long)]
        pairs: String,
    },
    /// Combine two relations over a base triple into the normalized family
    /// parametrization
    Family {
        #[command(flatten)]
        primes: PrimeArgs,
        /// Relation on (v, w) as JSON: {"k":1,"l":-1,"g":"1/3"}
        #[arg(long)]
        rel_vw: String,
        /// Relation on (u, w) as JSON: {"k":1,"l":-1,"g":"1/6"}
        #[arg(long)]
        rel_uw: String,
        /// Base triple "u:v:w"
        #[arg(long)]
        base: String,
        /// Sample triple "u:v:w"
        #[arg(long)]
        sample: String,
    },
    /// Build the curve polynomial of a family and count its
    /// odd-multiplicity zeros
    Audit {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Family JSON carrying "eta" (three rationals) and "d" (three
        /// non-negative integers); the output of `family` works directly
        #[arg(long)]
        family_json: String,
    },
    /// Probe gcd(f(v), f(w)) growth against the height of the pair
    GcdProbe {
        #[command(flatten)]
        primes: PrimeArgs,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Pairs "v:w" separated by commas
        #[arg(long)]
        pairs: String,
        /// Flagging threshold for log(gcd) / max height
        #[arg(long, default_value_t = DEFAULT_PROBE_EPSILON)]
        epsilon: f64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn emit(record: &Value) {
    println!("{record}");
}

fn json_big(n: &BigUint) -> Value {
    Value::Number(serde_json::Number::from_string_unchecked(n.to_string()))
}

fn json_values(values: &[BigUint]) -> Value {
    Value::Array(values.iter().map(json_big).collect())
}

fn json_exponents(exps: &[u32]) -> Value {
    json!(exps)
}

fn json_unit_fields(u: &SUnit) -> (Value, Value) {
    (json_big(u.value()), json_exponents(u.exponents()))
}

fn json_srational(r: &SRational) -> Value {
    Value::String(r.to_string())
}

fn parse_big(text: &str, what: &str) -> Result<BigUint, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("{what} must be a non-negative decimal integer, got {text:?}"))
}

fn parse_big_list(text: &str, what: &str) -> Result<Vec<BigUint>, String> {
    text.split(',').map(|item| parse_big(item, what)).collect()
}

fn parse_int_poly(text: &str) -> Result<IntPoly, String> {
    let rat = RatPoly::parse(text).map_err(|e| e.to_string())?;
    rat.to_int()
        .ok_or_else(|| "polynomial must have integer coefficients".to_string())
}

fn parse_unit_pairs(s: &PrimeSet, text: &str) -> Result<Vec<(SUnit, SUnit)>, String> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let (v, w) = item
            .trim()
            .split_once(':')
            .ok_or_else(|| format!("pair {item:?} must be written v:w"))?;
        let v = factor_smooth(&parse_big(v, "pair member")?, s).map_err(|e| e.to_string())?;
        let w = factor_smooth(&parse_big(w, "pair member")?, s).map_err(|e| e.to_string())?;
        out.push((v, w));
    }
    Ok(out)
}

fn parse_unit_triple(s: &PrimeSet, text: &str) -> Result<(SUnit, SUnit, SUnit), String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("triple {text:?} must be written u:v:w"));
    }
    let mut units = Vec::new();
    for part in parts {
        units.push(
            factor_smooth(&parse_big(part, "triple member")?, s).map_err(|e| e.to_string())?,
        );
    }
    Ok((units[0].clone(), units[1].clone(), units[2].clone()))
}

fn parse_relation(s: &PrimeSet, text: &str) -> Result<DependenceRelation, String> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| format!("relation is not valid JSON: {e}"))?;
    let k = value
        .get("k")
        .and_then(Value::as_i64)
        .ok_or("relation needs an integer field \"k\"")?;
    let l = value
        .get("l")
        .and_then(Value::as_i64)
        .ok_or("relation needs an integer field \"l\"")?;
    let g_text = match value.get("g") {
        Some(Value::String(text)) => text.clone(),
        Some(Value::Number(n)) => n.to_string(),
        _ => return Err("relation needs a rational field \"g\"".into()),
    };
    let g_rat = sdioph::polyarith::parse_rational(&g_text).map_err(|e| e.to_string())?;
    let g = SRational::from_rational(s, &g_rat)
        .map_err(|e| format!("g must factor over the prime set: {e}"))?;
    Ok(DependenceRelation { k, l, g })
}

fn parse_rational_field(value: &Value) -> Result<BigRational, String> {
    match value {
        Value::String(text) => sdioph::polyarith::parse_rational(text).map_err(|e| e.to_string()),
        Value::Number(n) => {
            sdioph::polyarith::parse_rational(&n.to_string()).map_err(|e| e.to_string())
        }
        _ => Err("expected a rational as string or number".into()),
    }
}

fn with_mode<T>(threads: usize, body: impl FnOnce(ExecMode) -> T + Send) -> T
where
    T: Send,
{
    if threads <= 1 {
        body(ExecMode::Sequential)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("failed to build thread pool");
        pool.install(|| body(ExecMode::Parallel))
    }
}

fn tuple_record_json(cmd: &str, record: &TupleRecord) -> Value {
    let witnesses: Vec<Value> = record
        .witnesses
        .iter()
        .map(|w| {
            let (s_value, exponents) = json_unit_fields(&w.s);
            json!({
                "i": w.i + 1,
                "j": w.j + 1,
                "s": s_value,
                "exponents": exponents,
            })
        })
        .collect();
    json!({
        "cmd": cmd,
        "ok": true,
        "values": json_values(&record.values),
        "witnesses": witnesses,
    })
}

fn family_json(fp: &FamilyParam) -> Value {
    let triple = |t: &(SUnit, SUnit, SUnit)| {
        Value::Array(vec![
            json_big(t.0.value()),
            json_big(t.1.value()),
            json_big(t.2.value()),
        ])
    };
    json!({
        "cmd": "family",
        "ok": true,
        "base": triple(&fp.base),
        "sample": triple(&fp.sample),
        "x": fp.x,
        "y": fp.y,
        "z": fp.z,
        "psi": fp.psi.entries(),
        "beta": fp.beta,
        "t": fp.t.entries(),
        "eta": [
            json_srational(&fp.eta[0]),
            json_srational(&fp.eta[1]),
            json_srational(&fp.eta[2]),
        ],
        "d": fp.d,
        "X": json_srational(&fp.power_base),
        "degrees_ordered": fp.degrees_ordered,
    })
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Smooth { primes, n } => {
            let s = primes.load()?;
            let n = parse_big(&n, "--n")?;
            match factor_smooth(&n, &s) {
                Ok(unit) => {
                    emit(&json!({
                        "cmd": "smooth",
                        "ok": true,
                        "n": json_big(&n),
                        "exponents": json_exponents(unit.exponents()),
                    }));
                    Ok(0)
                }
                Err(sdioph::sunit::SunitError::NotSmooth { .. }) => {
                    emit(&json!({
                        "cmd": "smooth",
                        "ok": false,
                        "n": json_big(&n),
                        "reason": "not-smooth",
                    }));
                    Ok(1)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Enumerate {
            primes,
            bound,
            progress,
        } => {
            let s = primes.load()?;
            let bound = parse_big(&bound, "--bound")?;
            let mut count = 0u64;
            for unit in SmoothStream::new(&s, Some(bound)) {
                let (value, exponents) = json_unit_fields(&unit);
                emit(&json!({
                    "cmd": "enumerate",
                    "ok": true,
                    "value": value,
                    "exponents": exponents,
                }));
                count += 1;
            }
            if progress {
                eprintln!("enumerated {count} smooth integers");
            }
            Ok(0)
        }
        Command::Search {
            primes,
            poly,
            size,
            bound,
            strict,
            exclude_trivial,
            threads,
            progress,
        } => {
            let s = primes.load()?;
            let f = parse_int_poly(&poly)?;
            let cfg = SearchConfig {
                bound: parse_big(&bound, "--bound")?,
                n: size,
                strict,
                exclude_trivial,
            };
            if progress {
                eprintln!("searching {size}-tuples up to {} over {{{s}}}", cfg.bound);
            }
            let records = with_mode(threads, |mode| search_tuples_mode(&s, &f, &cfg, mode))
                .map_err(|e| e.to_string())?;
            if progress {
                eprintln!("{} tuples found", records.len());
            }
            for record in &records {
                emit(&tuple_record_json("search", record));
            }
            Ok(0)
        }
        Command::Verify {
            primes,
            poly,
            tuple,
            threads,
        } => {
            let s = primes.load()?;
            let f = parse_int_poly(&poly)?;
            let values = parse_big_list(&tuple, "--tuple")?;
            let outcome = with_mode(threads, |mode| verify_tuple_mode(&values, &s, &f, mode));
            match outcome {
                Ok(record) => {
                    emit(&tuple_record_json("verify", &record));
                    Ok(0)
                }
                Err(VerifyError::Failure(failure)) => {
                    emit(&json!({
                        "cmd": "verify",
                        "ok": false,
                        "failing_pair": {
                            "i": failure.i + 1,
                            "j": failure.j + 1,
                            "a": json_big(&failure.a),
                            "b": json_big(&failure.b),
                        },
                        "reason": "no-s-unit-preimage",
                    }));
                    Ok(1)
                }
                Err(VerifyError::InvalidInput(message)) => Err(message),
            }
        }
        Command::Pairs {
            primes,
            poly,
            bound,
            threads,
        } => {
            let s = primes.load()?;
            let f = parse_int_poly(&poly)?;
            let bound = parse_big(&bound, "--bound")?;
            let hits = with_mode(threads, |mode| pairs_from_values_mode(&s, &f, &bound, mode))
                .map_err(|e| e.to_string())?;
            for hit in &hits {
                let (s_value, exponents) = json_unit_fields(&hit.witness);
                emit(&json!({
                    "cmd": "pairs",
                    "ok": true,
                    "a": json_big(&hit.a),
                    "b": json_big(&hit.b),
                    "s": s_value,
                    "exponents": exponents,
                }));
            }
            Ok(0)
        }
        Command::Construct { tuple, units } => {
            let values = parse_big_list(&tuple, "--tuple")?;
            let nodes = parse_big_list(&units, "--units")?;
            if values.len() != 3 || nodes.len() != 3 {
                return Err("--tuple and --units must each list exactly three values".into());
            }
            let to_rat =
                |n: &BigUint| BigRational::from_integer(BigInt::from(n.clone()));
            let (a, b, c) = (&values[0], &values[1], &values[2]);
            let points = vec![
                (to_rat(&nodes[0]), to_rat(&(a * b))),
                (to_rat(&nodes[1]), to_rat(&(a * c))),
                (to_rat(&nodes[2]), to_rat(&(b * c))),
            ];
            let g = lagrange_interpolate(&points).map_err(|e| e.to_string())?;
            let (d, f) = clear_denominators(&g).map_err(|e| e.to_string())?;
            let scaled: Vec<BigUint> = values.iter().map(|v| v * &d).collect();
            // round-trip audit before anything is printed
            for ((node, _), (left, right)) in points.iter().zip([
                (&scaled[0], &scaled[1]),
                (&scaled[0], &scaled[2]),
                (&scaled[1], &scaled[2]),
            ]) {
                let expected = BigRational::from_integer(BigInt::from(left * right));
                if f.eval(node) != expected {
                    return Err("internal: construction round-trip failed".into());
                }
            }
            emit(&json!({
                "cmd": "construct",
                "ok": true,
                "g": g.to_string(),
                "d": json_big(&d),
                "f": f.to_string(),
                "tuple": json_values(&scaled),
            }));
            Ok(0)
        }
        Command::CheckPoly { poly } => {
            let f = parse_int_poly(&poly)?;
            let report = check_theorem_hypotheses(&f).map_err(|e| e.to_string())?;
            emit(&json!({
                "cmd": "check-poly",
                "ok": true,
                "nonconstant": report.nonconstant,
                "nonzero_at_origin": report.nonzero_at_origin,
                "odd_root_count": report.odd_root_count,
                "positive_leading": report.positive_leading,
                "satisfies_theorem": report.satisfies_theorem,
            }));
            Ok(0)
        }
        Command::Dependence { primes, pairs } => {
            let s = primes.load()?;
            let pairs = parse_unit_pairs(&s, &pairs)?;
            match detect_dependence(&s, &pairs).map_err(|e| e.to_string())? {
                DependenceOutcome::Relation(rel) => {
                    emit(&json!({
                        "cmd": "dependence",
                        "ok": true,
                        "k": rel.k,
                        "l": rel.l,
                        "g": json_srational(&rel.g),
                    }));
                    Ok(0)
                }
                DependenceOutcome::NoRelation => {
                    emit(&json!({
                        "cmd": "dependence",
                        "ok": false,
                        "outcome": "no-relation",
                    }));
                    Ok(1)
                }
                DependenceOutcome::DegenerateFamily => {
                    emit(&json!({
                        "cmd": "dependence",
                        "ok": false,
                        "outcome": "degenerate-family",
                    }));
                    Ok(1)
                }
            }
        }
        Command::Family {
            primes,
            rel_vw,
            rel_uw,
            base,
            sample,
        } => {
            let s = primes.load()?;
            let rel_vw = parse_relation(&s, &rel_vw)?;
            let rel_uw = parse_relation(&s, &rel_uw)?;
            let base = parse_unit_triple(&s, &base)?;
            let sample = parse_unit_triple(&s, &sample)?;
            let frame = combine_dependences(&s, &rel_vw, &rel_uw, &base, &sample)
                .map_err(|e| e.to_string())?;
            let fp = normalize_mod3(&s, &frame).map_err(|e| e.to_string())?;
            emit(&family_json(&fp));
            Ok(0)
        }
        Command::Audit { poly, family_json } => {
            let f = parse_int_poly(&poly)?;
            let value: Value = serde_json::from_str(&family_json)
                .map_err(|e| format!("--family-json is not valid JSON: {e}"))?;
            let eta_values = value
                .get("eta")
                .and_then(Value::as_array)
                .ok_or("family JSON needs an \"eta\" array")?;
            let d_values = value
                .get("d")
                .and_then(Value::as_array)
                .ok_or("family JSON needs a \"d\" array")?;
            if eta_values.len() != 3 || d_values.len() != 3 {
                return Err("\"eta\" and \"d\" must each have three entries".into());
            }
            let mut etas = Vec::new();
            for v in eta_values {
                let eta = parse_rational_field(v)?;
                if !eta.is_positive() {
                    return Err("η values must be positive".into());
                }
                etas.push(eta);
            }
            let mut degrees = [0u64; 3];
            for (i, v) in d_values.iter().enumerate() {
                degrees[i] = v
                    .as_u64()
                    .ok_or("\"d\" entries must be non-negative integers")?;
            }
            let curve = build_curve_from_parts(
                &f,
                &[etas[0].clone(), etas[1].clone(), etas[2].clone()],
                &degrees,
            )
            .map_err(|e| e.to_string())?;
            let (t, verdict) = audit_odd_roots(&curve).map_err(|e| e.to_string())?;
            emit(&json!({
                "cmd": "audit",
                "ok": true,
                "t_f": t,
                "verdict": match verdict {
                    AuditVerdict::FinitenessForced => "finiteness-forced",
                    AuditVerdict::Inconclusive => "inconclusive",
                },
                "degree": curve.degree().map(|d| d as u64),
            }));
            Ok(0)
        }
        Command::GcdProbe {
            primes,
            poly,
            pairs,
            epsilon,
            threads,
        } => {
            let s = primes.load()?;
            let f = parse_int_poly(&poly)?;
            let pairs = parse_unit_pairs(&s, &pairs)?;
            let (samples, summary) =
                with_mode(threads, |mode| gcd_probe_mode(&f, &pairs, epsilon, mode))
                    .map_err(|e| e.to_string())?;
            for sample in &samples {
                emit(&json!({
                    "cmd": "gcd-probe",
                    "ok": true,
                    "v": json_big(sample.v.value()),
                    "w": json_big(sample.w.value()),
                    "fv": json_big(&sample.fv),
                    "fw": json_big(&sample.fw),
                    "gcd": json_big(&sample.gcd),
                    "ratio": sample.ratio,
                    "flagged": sample.flagged,
                }));
            }
            emit(&json!({
                "cmd": "gcd-probe",
                "ok": true,
                "summary": true,
                "pairs": summary.pairs,
                "flagged": summary.flagged,
                "epsilon": summary.epsilon,
                "max_ratio": summary.max_ratio,
            }));
            Ok(0)
        }
    }
}
