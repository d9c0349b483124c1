use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use qsym::braidb::{kohno_drinfeld_compare, kz_side_rep, q_side_rep, Word};
use qsym::cohoch::{build_complex, subalgebra_basis, wedge_dims, LieAlgebra, Subalgebra};
use qsym::kzmono::{identity_residuals, psi_kz, reps_from_legs, KzOptions};
use qsym::linalg::CMat;
use qsym::rootdata::to_f64;
use qsym::satake::{build_aiii, normalization_constants, partition_roots, restricted_basis, root_label};
use qsym::sln::{coisotropy_residual, fix_theta_residual, omega_pairing, r_rotation_residual, realize, wedge2_m_invariants};
use qsym::uqsl::{closed_form, quasi_k_in_rep, scalar_match, solve_kmatrix, CoidealParams};
use qsym::{acceptance, Error};

const EXIT_HELP: &str = "\
Exit codes:
   0  success
   2  command-line parse error
   3  a check ran but exceeded its tolerance (verify-all: some criterion failed)
  10  invalid dimension       11  parameter error      12  shape error
  13  domain error            14  structural error     15  KZ resonance
  16  series truncation       17  no nonconstant K     18  quasi-K inconsistency
  19  unsupported input       20  comparison failure   21  solver failure";

#[derive(Parser, Serialize)]
#[command(name = "qsym", about = "KZ monodromy and coideal K-matrices for AIII symmetric pairs", after_help = EXIT_HELP)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Serialize, PartialEq)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Satake data, root partition and normalization of the AIII pair.
    Satake(Pair),
    /// Cascade of strongly orthogonal roots and restricted root basis.
    Cascade(Pair),
    /// Cayley transform residuals at one angle.
    CayleyCheck {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 0.7)]
        phi: f64,
    },
    /// Values of the Ω-pairing on t^{m±} and t^k.
    Pairing(Pair),
    /// Cyclotomic KZ associator Ψ on tensor powers of the vector representation.
    KzPsi {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        num: Numerics,
        #[arg(long, default_value = "0", value_parser = parse_complex)]
        s: Complex64,
        #[arg(long, default_value = "0", value_parser = parse_complex)]
        mu: Complex64,
        /// Tensor powers on the three legs, comma separated.
        #[arg(long, default_value = "1,1,1", value_delimiter = ',')]
        legs: Vec<usize>,
        /// Also report pentagon, hexagon and ribbon residuals.
        #[arg(long)]
        identities: bool,
        #[arg(long)]
        matrix: bool,
    },
    /// K-matrix of the coideal for given parameters.
    Kmatrix {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        t: TypeParams,
        #[arg(long, value_enum, default_value = "commutant")]
        route: Route,
    },
    /// Type-B braid group representation and its relation residuals.
    BraidRep {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        t: TypeParams,
        #[arg(long, default_value_t = 2)]
        strands: usize,
        #[arg(long, value_enum, default_value = "q")]
        side: Side,
        #[arg(long)]
        generators: bool,
    },
    /// Trace comparison of the quantum-group and KZ braid representations.
    KohnoDrinfeld {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        t: TypeParams,
        #[arg(long, default_value_t = 2)]
        strands: usize,
        /// Words in r (ρ₁), sK (σ_K), capitals for inverses; comma separated.
        #[arg(long, default_value = "r,s,rs,rsrs", value_delimiter = ',')]
        words: Vec<String>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Co-Hochschild cohomology dimensions per (degree, weight).
    Cohomology {
        #[arg(long, value_enum, default_value = "sl2")]
        g: Algebra,
        #[arg(long, value_enum, default_value = "zero")]
        h: Sub,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
        /// Restrict to h-invariant cochains.
        #[arg(long)]
        invariant: bool,
    },
    /// Run every acceptance criterion.
    VerifyAll,
}

#[derive(clap::Args, Serialize)]
struct Pair {
    #[arg(long = "n", short = 'n')]
    n: usize,
    #[arg(long)]
    p: usize,
}

#[derive(clap::Args, Serialize)]
struct Numerics {
    #[arg(long, default_value_t = 0.05)]
    h: f64,
    #[arg(long, env = "QSYM_TOL", default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 200)]
    max_order: usize,
}

#[derive(clap::Args, Serialize)]
struct TypeParams {
    #[arg(long, default_value_t = 0.05, conflicts_with = "q")]
    h: f64,
    #[arg(long)]
    q: Option<f64>,
    /// S-type: the parameter s_p (purely imaginary).
    #[arg(long, default_value = "0", value_parser = parse_complex)]
    sp: Complex64,
    /// C-type: c_p = c0 q^kappa.
    #[arg(long, default_value_t = 1.0)]
    c0: f64,
    #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
    kappa: f64,
}

impl TypeParams {
    fn q(&self) -> f64 {
        self.q.unwrap_or(self.h.exp())
    }

    fn params(&self, n: usize, p: usize) -> qsym::Result<CoidealParams> {
        if 2 * p == n {
            CoidealParams::s_type(n, self.q(), self.sp)
        } else {
            CoidealParams::c_type(n, p, self.q(), Complex64::new(self.c0, 0.0), self.kappa)
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Route {
    Commutant,
    Quasik,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Side {
    Q,
    Kz,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Algebra {
    Sl2,
    Sl3,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Sub {
    Zero,
    Cartan,
    So3,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(Complex64::new(x, 0.0));
    }
    if let Some(body) = t.strip_suffix('i') {
        let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
        let (re, im) = match split {
            Some(k) if !body[..k].ends_with(['e', 'E']) => (&body[..k], &body[k..]),
            _ => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            x => x,
        };
        if let (Ok(a), Ok(b)) = (re.parse::<f64>(), im.parse::<f64>()) {
            return Ok(Complex64::new(a, b));
        }
    }
    Err(format!("cannot parse {s:?} as a complex number (use e.g. 0.3, 0.3i, 0.1-0.2i)"))
}

fn matrix_json(m: &CMat) -> Value {
    let re: Vec<Vec<f64>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)].re).collect()).collect();
    let im: Vec<Vec<f64>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)].im).collect()).collect();
    json!({ "re": re, "im": im })
}

fn matrix_csv(m: &CMat) -> String {
    let mut s = String::from("row,col,re,im\n");
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            s += &format!("{},{},{},{}\n", i + 1, j + 1, fmt15(m[(i, j)].re), fmt15(m[(i, j)].im));
        }
    }
    s
}

fn fmt15(x: f64) -> String {
    format!("{:e}", round15(x))
}

fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap()
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => json!(round15(n.as_f64().unwrap())),
        Value::Array(a) => Value::Array(a.into_iter().map(round_value).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

struct Report {
    results: Value,
    residuals: Value,
    ok: bool,
    csv: Option<String>,
}

impl Report {
    fn new(results: Value, residuals: Value, ok: bool) -> Self {
        Report { results, residuals, ok, csv: None }
    }
}

fn run(cli: &Cli) -> qsym::Result<Report> {
    match &cli.command {
        Command::Satake(pr) => {
            let sd = build_aiii(pr.n, pr.p)?;
            let part = partition_roots(&sd)?;
            let norm = normalization_constants(&sd)?;
            Ok(Report::new(
                json!({
                    "x": sd.x, "tau": sd.tau, "hermitian_tag": sd.hermitian_tag,
                    "distinguished": sd.distinguished,
                    "z_nu": sd.z_nu.iter().map(to_f64).collect::<Vec<_>>(),
                    "partition": {
                        "p0": part.p0.len(), "c0": part.c0.len(),
                        "pi": part.pi.iter().map(Vec::len).collect::<Vec<_>>(),
                        "ci": part.ci.iter().map(Vec::len).collect::<Vec<_>>(),
                        "pij": part.count_pij(), "cij": part.count_cij(), "total": part.total(),
                    },
                    "a_sigma": norm.a_sigma,
                }),
                json!({}),
                true,
            ))
        }
        Command::Cascade(pr) => {
            let sd = build_aiii(pr.n, pr.p)?;
            let basis = restricted_basis(&sd)?;
            Ok(Report::new(
                json!({
                    "cascade": sd.cascade.iter().map(|r| root_label(&r.vector)).collect::<Vec<_>>(),
                    "restricted_basis": basis.iter().map(|v| v.iter().map(to_f64).collect::<Vec<_>>()).collect::<Vec<_>>(),
                }),
                json!({}),
                true,
            ))
        }
        Command::CayleyCheck { pair, phi } => {
            let pr = realize(pair.n, pair.p)?;
            let rot = r_rotation_residual(&pr, *phi);
            let coi = coisotropy_residual(&pr, *phi)?;
            let fix = fix_theta_residual(&pr, *phi).ok();
            let ok = rot <= 1e-12 && coi <= 1e-12 && fix.is_none_or(|x| x <= 1e-10);
            Ok(Report::new(json!({}), json!({"r_rotation": rot, "coisotropy": coi, "fix_theta": fix}), ok))
        }
        Command::Pairing(pair) => {
            let pr = realize(pair.n, pair.p)?;
            let vals = json!({
                "t_m_plus": omega_pairing(&pr, &pr.t_mplus),
                "t_m_minus": omega_pairing(&pr, &pr.t_mminus),
                "t_k": omega_pairing(&pr, &pr.t_k),
                "expected_abs": pr.dim_m() as f64 / 2.0,
                "wedge2_m_invariants": wedge2_m_invariants(&pr),
            });
            Ok(Report::new(vals, json!({}), true))
        }
        Command::KzPsi { pair, num, s, mu, legs, identities, matrix } => {
            let pr = realize(pair.n, pair.p)?;
            let reps = reps_from_legs(pair.n, legs);
            let opts = KzOptions { tol: num.tol, max_order: num.max_order };
            let r = psi_kz(&pr, &reps, *s, *mu, num.h, opts)?;
            let mut results = json!({"order_used": r.order_used, "tail_estimate": r.tail_estimate, "dim": r.psi.nrows()});
            if *matrix || cli.format == Format::Csv {
                results["psi"] = matrix_json(&r.psi);
            }
            let residuals = if *identities { json!(identity_residuals(&pr, *s, *mu, num.h)?) } else { json!({}) };
            let ok = residuals.as_object().unwrap().values().all(|v| v.as_f64().unwrap() <= 1e-8);
            let mut rep = Report::new(results, residuals, ok);
            rep.csv = Some(matrix_csv(&r.psi));
            Ok(rep)
        }
        Command::Kmatrix { pair, t, route } => {
            let params = t.params(pair.n, pair.p)?;
            match route {
                Route::Commutant => {
                    let kr = solve_kmatrix(&params)?;
                    let closed = qsym::linalg::max_abs(&(&kr.k - closed_form(&params)));
                    let residuals = json!({
                        "commutant": kr.commutant_residual, "reflection": kr.reflection_residual,
                        "mudrov": kr.mudrov_residual, "normalization": kr.normalization_check,
                        "closed_form": closed, "s_plus_mu_closed_form": kr.inferred.discrepancy,
                    });
                    let ok = [kr.commutant_residual, kr.reflection_residual, closed, kr.inferred.discrepancy]
                        .iter()
                        .all(|x| *x <= 1e-9);
                    let results = json!({
                        "k": matrix_json(&kr.k), "mudrov": kr.mudrov, "eigenvalues": kr.eigenvalues,
                        "s": kr.inferred.s, "s_plus_mu": kr.inferred.s_plus_mu, "g": kr.inferred.g,
                        "both_signs_fit": kr.inferred.both_signs_fit, "closed_form_s_plus_mu": kr.inferred.closed_form,
                    });
                    let mut rep = Report::new(results, residuals, ok);
                    rep.csv = Some(matrix_csv(&kr.k));
                    Ok(rep)
                }
                Route::Quasik => {
                    let qk = quasi_k_in_rep(pair.n, pair.p, params.q)?;
                    let kc = solve_kmatrix(&CoidealParams::standard(pair.n, pair.p, params.q)?)?.k;
                    let (lam, err) = scalar_match(&kc, &qk.k);
                    let mut rep = Report::new(
                        json!({"k": matrix_json(&qk.k), "quasi_k": matrix_json(&qk.x), "scalar_to_commutant": lam}),
                        json!({"recursion": qk.max_residual, "cross_route": err}),
                        err <= 1e-9,
                    );
                    rep.csv = Some(matrix_csv(&qk.k));
                    Ok(rep)
                }
            }
        }
        Command::BraidRep { pair, t, strands, side, generators } => {
            let params = t.params(pair.n, pair.p)?;
            let kr = solve_kmatrix(&params)?;
            let rep = match side {
                Side::Q => q_side_rep(&params, &kr.k, *strands)?,
                Side::Kz => kz_side_rep(pair.n, pair.p, kr.inferred.s_plus_mu, params.q.ln(), kr.inferred.g, *strands)?,
            };
            let mut results = json!({"dim": rep.dim, "grouping": rep.grouping});
            if *generators {
                results["rho1"] = matrix_json(&rep.rho1);
                results["sigma"] = Value::Array(rep.sigma.iter().map(matrix_json).collect());
            }
            let ok = rep.max_residual() <= 1e-8;
            Ok(Report::new(results, json!(rep.residuals), ok))
        }
        Command::KohnoDrinfeld { pair, t, strands, words, tol } => {
            let params = t.params(pair.n, pair.p)?;
            let ws: Vec<Word> = words.iter().map(|w| Word::parse(w)).collect::<qsym::Result<_>>()?;
            let r = kohno_drinfeld_compare(&params, &ws, *strands)?;
            let mut csv = String::from("word,q_re,q_im,kz_re,kz_im,delta\n");
            for x in &r.traces {
                csv += &format!(
                    "{},{},{},{},{},{}\n",
                    x.word,
                    fmt15(x.q_side.re),
                    fmt15(x.q_side.im),
                    fmt15(x.kz_side.re),
                    fmt15(x.kz_side.im),
                    fmt15(x.delta)
                );
            }
            let mut rep = Report::new(
                json!({"s_plus_mu": r.s_plus_mu, "g": r.g, "traces": r.traces, "max_delta": r.max_delta}),
                json!({"q_side": r.q_residuals, "kz_side": r.kz_residuals, "det_rho": r.det_rho_delta}),
                r.max_delta <= *tol,
            );
            rep.csv = Some(csv);
            Ok(rep)
        }
        Command::Cohomology { g, h, max_degree, max_weight, invariant } => {
            let n = match g {
                Algebra::Sl2 => 2,
                Algebra::Sl3 => 3,
            };
            let sub = match h {
                Sub::Zero => Subalgebra::Zero,
                Sub::Cartan => Subalgebra::Cartan,
                Sub::So3 if n == 3 => Subalgebra::So,
                Sub::So3 => return Err(Error::Parameter("so3 is a subalgebra of sl3 only".into())),
            };
            let lie = LieAlgebra::sl(n)?;
            let hb = subalgebra_basis(n, sub);
            let cc = build_complex(&lie, &hb, *max_degree, *max_weight)?;
            let table = cc.cohomology_dims(*invariant);
            let wedge = wedge_dims(&lie, &hb, *max_degree)?;
            let expected: Vec<usize> = wedge.iter().map(|(a, b)| if *invariant { *b } else { *a }).collect();
            let ok = (0..=*max_degree)
                .all(|d| d > *max_weight || table.iter().filter(|e| e.degree == d).map(|e| e.dim).sum::<usize>() == expected[d]);
            let mut csv = String::from("degree,weight,cochains,dim\n");
            for e in &table {
                csv += &format!("{},{},{},{}\n", e.degree, e.weight, e.cochains, e.dim);
            }
            let mut rep = Report::new(json!({"table": table, "expected_by_degree": expected}), json!({}), ok);
            rep.csv = Some(csv);
            Ok(rep)
        }
        Command::VerifyAll => {
            let rs = acceptance::run_all();
            let ok = rs.iter().all(|r| r.pass);
            let mut csv = String::from("id,name,status,detail\n");
            for r in &rs {
                csv += &format!("{},{},{},\"{}\"\n", r.id, r.name, if r.pass { "PASS" } else { "FAIL" }, r.detail);
            }
            let mut rep = Report::new(json!(rs), json!({}), ok);
            rep.csv = Some(csv);
            Ok(rep)
        }
    }
}

fn emit(s: &str) {
    // a closed pipe downstream is not an error for us
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = serde_json::to_value(&cli.command).unwrap();
    let name = match &echo {
        Value::Object(o) => o.keys().next().cloned().unwrap_or_default(),
        Value::String(s) => s.clone(),
        _ => String::new(),
    };
    match run(&cli) {
        Ok(rep) => {
            if matches!(cli.command, Command::VerifyAll) {
                for r in rep.results.as_array().unwrap() {
                    eprintln!(
                        "{} {:>2} {}: {}",
                        if r["pass"].as_bool().unwrap() { "PASS" } else { "FAIL" },
                        r["id"],
                        r["name"].as_str().unwrap(),
                        r["detail"].as_str().unwrap()
                    );
                }
            }
            match (cli.format, &rep.csv) {
                (Format::Csv, Some(csv)) => emit(csv),
                _ => {
                    let out = json!({
                        "command": name,
                        "config_echo": echo,
                        "results": rep.results,
                        "residuals": rep.residuals,
                        "status": if rep.ok { "ok" } else { "fail" },
                    });
                    emit(&(serde_json::to_string_pretty(&round_value(out)).unwrap() + "\n"));
                }
            }
            if rep.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            let out = json!({"command": name, "config_echo": echo, "status": "error", "error": e.to_string(), "code": e.code()});
            emit(&(serde_json::to_string_pretty(&round_value(out)).unwrap() + "\n"));
            eprintln!("error: {e}");
            ExitCode::from(e.code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("0.3").unwrap(), Complex64::new(0.3, 0.0));
        assert_eq!(parse_complex("0.3i").unwrap(), Complex64::new(0.0, 0.3));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("0.1-0.2i").unwrap(), Complex64::new(0.1, -0.2));
        assert_eq!(parse_complex("1e-3+2i").unwrap(), Complex64::new(1e-3, 2.0));
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn rounding_is_stable() {
        assert_eq!(round15(0.1 + 0.2), 0.3);
        assert_eq!(round15(round15(1.0 / 3.0)), round15(1.0 / 3.0));
    }
}
