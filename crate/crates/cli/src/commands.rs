use std::sync::atomic::{AtomicU64, Ordering};

use anyhow::{Context, Result};
use num_bigint::BigInt;

use cubesum_core::arith::integer::primes_up_to;
use cubesum_core::diophantine::{
    canonical_form, mkl_to_xyz, pagliani, pagliani_identity_holds, pagliani_polynomials,
    pagliani_u_up_to, search_with, xyz_to_mkl, SearchOptions,
};
use cubesum_core::elliptic::{omega_sigma1, section_to_xyz, section_to_xyz_u, sigma1, sigma1_prime, tau};
use cubesum_core::fibration::{classify_fibers, det_ns, shioda_tate_rank, HeightContext};
use cubesum_core::modular::{ap_closed_form, eta_quotient, normalize_pi, surface_ap_via_characters};
use cubesum_core::pointcount::{brute_count_surface_with, formula_count_surface, trace_alg};
use cubesum_core::{
    Convention, EtaQuotientSpec, Field, FunctionFieldCurve, HeightConvention, NfElem, Omega, Point,
    Rational, RationalFunction, SolutionMKL, SolutionXYZ, Variant,
};

use crate::cache::{self, CoefficientCache};
use crate::output::{Output, Table};
use crate::records::*;
use crate::verify::{self, Status};
use crate::{
    ApArgs, CacheCommand, Cli, Command, ConventionArg, CountArgs, EtaArgs, FibersArgs,
    HeightConventionArg, HeightsArgs, MapCommand, MwCommand, Outcome, PaglianiArgs, SearchArgs,
    Surface, UsageError, VerifyArgs,
};

type Done = Result<(Output, Outcome)>;

fn ok(output: Output) -> Done {
    Ok((output, Outcome::Success))
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Progress lines on standard error at every tenth of the work.
struct Progress {
    label: &'static str,
    enabled: bool,
    last: AtomicU64,
}

impl Progress {
    fn new(label: &'static str, enabled: bool) -> Self {
        Progress { label, enabled, last: AtomicU64::new(0) }
    }

    fn tick(&self, done: u64, total: u64) {
        if !self.enabled || total == 0 {
            return;
        }
        let tenth = done * 10 / total;
        if self.last.fetch_max(tenth, Ordering::Relaxed) < tenth {
            eprintln!("{}: {done}/{total} ({}%)", self.label, tenth * 10);
        }
    }
}

pub fn dispatch(cli: &Cli) -> Done {
    match &cli.command {
        Command::Search(a) => search(a, cli.progress || a.bound >= 100_000),
        Command::Map(m) => map(m),
        Command::Pagliani(a) => pagliani_cmd(a),
        Command::Fibers(a) => fibers(a),
        Command::Heights(a) => heights(a),
        Command::Mw(m) => mw(m),
        Command::Eta(a) => eta(a),
        Command::Ap(a) => ap(a, &cache_at(cli)),
        Command::Count(a) => count(a, cli.progress),
        Command::Verify(a) => verify_cmd(a, cli.progress),
        Command::Cache(c) => cache_cmd(c, &cache_at(cli)),
    }
}

fn cache_at(cli: &Cli) -> CoefficientCache {
    CoefficientCache::at(cli.cache.clone().unwrap_or_else(cache::default_path))
}

fn search(a: &SearchArgs, progress: bool) -> Done {
    let meter = Progress::new("search", progress);
    let tick = |done, total| meter.tick(done, total);
    let mut opts = SearchOptions::new(a.bound);
    opts.include_trivial = a.include_trivial;
    opts.progress = Some(&tick);
    let report = search_with(&opts)?;
    if progress {
        eprintln!(
            "search: bound {}, {} nontrivial, {} trivial",
            report.bound, report.nontrivial_count, report.trivial_count
        );
    }
    let records: Vec<SolutionRecord> = report.solutions.iter().map(SolutionRecord::new).collect();
    ok(Output::records(&records))
}

fn map(m: &MapCommand) -> Done {
    let record = match m {
        MapCommand::ToXyz { m, k, l } => {
            let s = SolutionMKL::new(m.clone(), k.clone(), l.clone())?;
            MapRecord::new(Some(&s), &mkl_to_xyz(&s))
        }
        MapCommand::ToMkl { x, y, z } => {
            let s = SolutionXYZ::new(x.clone(), y.clone(), z.clone())?;
            let mkl = xyz_to_mkl(&s)?;
            MapRecord::new(Some(&mkl), &s)
        }
    };
    let plain = format!(
        "(m, k, l) = ({}, {}, {})  (x, y, z) = ({}, {}, {})  canonical ({})",
        record.m.as_deref().unwrap_or("-"),
        record.k.as_deref().unwrap_or("-"),
        record.l.as_deref().unwrap_or("-"),
        record.x,
        record.y,
        record.z,
        record.canonical.join(", ")
    );
    ok(Output::single(&record, plain))
}

fn pagliani_record(u: &BigInt) -> Result<PaglianiRecord> {
    let s = pagliani(u)?;
    let c = canonical_form(&mkl_to_xyz(&s));
    Ok(PaglianiRecord {
        u: u.to_string(),
        m: s.m.to_string(),
        k: s.k.to_string(),
        l: s.l.to_string(),
        canonical: [c.x.to_string(), c.y.to_string(), c.z.to_string()],
    })
}

fn pagliani_cmd(a: &PaglianiArgs) -> Done {
    if a.identity {
        let (m, k, l) = pagliani_polynomials();
        let record = PaglianiIdentityRecord {
            m: m.display_in("u"),
            k: k.display_in("u"),
            l: l.display_in("u"),
            identity_holds: pagliani_identity_holds(),
        };
        let plain = format!(
            "m = {}\nk = {}\nl = {}\nidentity {}",
            record.m,
            record.k,
            record.l,
            if record.identity_holds { "holds" } else { "fails" }
        );
        let outcome = if record.identity_holds { Outcome::Success } else { Outcome::CheckFailed };
        return Ok((Output::single(&record, plain), outcome));
    }
    let us: Vec<BigInt> = match (&a.u, a.up_to) {
        (Some(u), _) => vec![u.clone()],
        (None, Some(b)) => pagliani_u_up_to(b).into_iter().map(BigInt::from).collect(),
        _ => return Err(usage("one of --u, --up-to, --identity is required")),
    };
    let records = us.iter().map(pagliani_record).collect::<Result<Vec<_>>>()?;
    ok(Output::records(&records))
}

fn fibers(a: &FibersArgs) -> Done {
    let curve = match a.surface {
        Surface::ET => FunctionFieldCurve::<Rational>::e_t(),
        Surface::Eps2 => FunctionFieldCurve::eps2(),
    };
    let fibers = classify_fibers(&curve)?;
    let records: Vec<FiberRecord> = fibers.iter().map(FiberRecord::new).collect();
    let out = Output::records(&records);
    let plain = format!(
        "{}\neuler total {}",
        out.plain,
        cubesum_core::fibration::euler_total(&fibers)
    );
    ok(out.with_plain(plain))
}

fn matrix_plain(m: &[Vec<String>]) -> String {
    m.iter().map(|r| r.join("  ")).collect::<Vec<_>>().join("\n")
}

fn heights(a: &HeightsArgs) -> Done {
    let ctx = HeightContext::<NfElem<Omega>>::e_t();
    let mw = ctx.gram(&[sigma1(), omega_sigma1()])?;
    let convention = match a.convention {
        HeightConventionArg::Canonical => HeightConvention::Canonical,
        HeightConventionArg::MwLattice => HeightConvention::MwLattice,
    };
    let g = mw.to(convention);
    let gram: Vec<Vec<String>> = g.entries.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let record = HeightsRecord {
        sections: vec!["sigma1".into(), "[w]sigma1".into()],
        convention: convention.to_string(),
        det: g.det().to_string(),
        mw_rank: "2".into(),
        shioda_tate_rank: shioda_tate_rank(&ctx.fibers, 2).to_string(),
        torsion_order: a.torsion.to_string(),
        det_ns: det_ns(&ctx.fibers, &mw, a.torsion)?.to_string(),
        gram,
    };
    let plain = format!(
        "Gram matrix of sigma1, [w]sigma1 ({}):\n{}\ndet {}\nrank NS {}\ndet NS {}",
        record.convention,
        matrix_plain(&record.gram),
        record.det,
        record.shioda_tate_rank,
        record.det_ns
    );
    let table = Table {
        header: vec!["row".into(), "sigma1".into(), "[w]sigma1".into()],
        rows: record
            .sections
            .iter()
            .zip(&record.gram)
            .map(|(s, r)| std::iter::once(s.clone()).chain(r.iter().cloned()).collect())
            .collect(),
    };
    ok(Output::single(&record, plain).with_table(table))
}

fn show_xyz<F: Field>(t: &[RationalFunction<F>; 3], var: &str) -> [String; 3] {
    [t[0].display_in(var), t[1].display_in(var), t[2].display_in(var)]
}

fn mw(m: &MwCommand) -> Done {
    let records = match *m {
        MwCommand::Combo { a, b } => {
            let ctx = HeightContext::<NfElem<Omega>>::e_t();
            let e = &ctx.curve;
            let p = e.add(&e.mul(a, &sigma1())?, &e.mul(b, &omega_sigma1())?)?;
            let name = format!("{a}*sigma1 + {b}*[w]sigma1");
            match &p {
                Point::Infinity => vec![SectionRecord {
                    section: name,
                    curve: "E_t".into(),
                    x: "O".into(),
                    y: "O".into(),
                    height: Some("0".into()),
                    xyz: None,
                }],
                Point::Affine { x, y } => vec![SectionRecord {
                    section: name,
                    curve: "E_t".into(),
                    x: x.display_in("t"),
                    y: y.display_in("t"),
                    height: Some(ctx.height_pairing(&p, &p)?.to_string()),
                    xyz: section_to_xyz(&p).ok().map(|t| show_xyz(&t, "t")),
                }],
            }
        }
        MwCommand::Translate => {
            let e = FunctionFieldCurve::<Rational>::e_prime_u();
            let sum = e.add(&sigma1_prime(), &tau())?;
            [("sigma1' + tau", sum.clone()), ("-(sigma1' + tau)", e.negate(&sum))]
                .into_iter()
                .map(|(name, p)| {
                    let (x, y) = match &p {
                        Point::Affine { x, y } => (x.display_in("u"), y.display_in("u")),
                        Point::Infinity => ("O".into(), "O".into()),
                    };
                    SectionRecord {
                        section: name.into(),
                        curve: "E'_u".into(),
                        x,
                        y,
                        height: None,
                        xyz: section_to_xyz_u(&p).ok().map(|t| show_xyz(&t, "u")),
                    }
                })
                .collect()
        }
    };
    let plain = records
        .iter()
        .map(|r| {
            let mut s = format!("{} on {}:\n  x = {}\n  y = {}", r.section, r.curve, r.x, r.y);
            if let Some(h) = &r.height {
                s += &format!("\n  height = {h}");
            }
            if let Some([x, y, z]) = &r.xyz {
                s += &format!("\n  (x, y, z) = ({x}, {y}, {z})");
            }
            s
        })
        .collect::<Vec<_>>()
        .join("\n");
    ok(Output::records(&records).with_plain(plain))
}

fn parse_spec(s: &str) -> Result<EtaQuotientSpec> {
    let factors = s
        .split(',')
        .map(|f| {
            let (d, e) = f.trim().split_once(':').ok_or_else(|| usage(format!("factor {f:?} is not d:e")))?;
            let d = d.parse().map_err(|_| usage(format!("bad scale in {f:?}")))?;
            let e = e.parse().map_err(|_| usage(format!("bad exponent in {f:?}")))?;
            Ok((d, e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EtaQuotientSpec::new(factors)?)
}

fn eta(a: &EtaArgs) -> Done {
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let spec = match &a.spec {
        Some(s) => parse_spec(s)?,
        None => EtaQuotientSpec::weight_three_level_48(),
    };
    let series = eta_quotient(&spec, a.n)?;
    let terms: Vec<CoefficientRecord> = series
        .nonzero()
        .into_iter()
        .map(|(n, c)| CoefficientRecord { n: n.to_string(), a_n: c.to_string() })
        .collect();
    let record = EtaRecord {
        spec: spec.to_string(),
        precision: a.n.to_string(),
        order: spec.order().to_string(),
        terms,
    };
    let table = Table::from_records(&serde_json::to_value(&record.terms)?);
    ok(Output::single(&record, series.to_string()).with_table(table))
}

fn ap_record(p: u64, hecke: &[BigInt]) -> Result<ApRecord> {
    let closed = ap_closed_form(p)?;
    let (via, plus, minus) = if p % 3 == 1 {
        (
            Some(surface_ap_via_characters(p)?),
            Some(normalize_pi(p, Variant::Plus)?.pi.to_string()),
            Some(normalize_pi(p, Variant::Minus)?.pi.to_string()),
        )
    } else {
        (None, None, None)
    };
    let h = hecke[p as usize].clone();
    let agree = h == closed && via.as_ref().is_none_or(|v| *v == closed);
    Ok(ApRecord {
        p: p.to_string(),
        closed_form: closed.to_string(),
        via_characters: via.map(|v| v.to_string()),
        hecke: h.to_string(),
        pi_plus: plus,
        pi_minus: minus,
        agree,
    })
}

fn ap(a: &ApArgs, cache: &CoefficientCache) -> Done {
    if let Some(n) = a.coefficients {
        if n == 0 {
            return Err(usage("--coefficients must be at least 1"));
        }
        let coeffs = cache.get(n)?;
        let records: Vec<CoefficientRecord> = (1..=n)
            .map(|i| CoefficientRecord { n: i.to_string(), a_n: coeffs[i].to_string() })
            .collect();
        return ok(Output::records(&records));
    }
    let primes: Vec<u64> = match (a.p, a.up_to) {
        (Some(p), _) => vec![p],
        (None, Some(n)) => primes_up_to(n).into_iter().filter(|&p| p >= 5).collect(),
        _ => return Err(usage("one of --p, --up-to, --coefficients is required")),
    };
    let max = primes.iter().copied().max().unwrap_or(0) as usize;
    let hecke = cache.get(max.max(1))?;
    let records = primes.iter().map(|&p| ap_record(p, &hecke)).collect::<Result<Vec<_>>>()?;
    let outcome = if records.iter().all(|r| r.agree) { Outcome::Success } else { Outcome::CheckFailed };
    Ok((Output::records(&records), outcome))
}

fn count(a: &CountArgs, progress: bool) -> Done {
    let primes: Vec<u64> = match (a.p, a.up_to) {
        (Some(p), _) => vec![p],
        (None, Some(n)) => primes_up_to(n).into_iter().filter(|&p| p >= 5).collect(),
        _ => return Err(usage("one of --p, --up-to is required")),
    };
    let conventions: Vec<Convention> = match a.convention {
        ConventionArg::FrobeniusPower => vec![Convention::FrobeniusPower],
        ConventionArg::ModularCoefficient => vec![Convention::ModularCoefficient],
        ConventionArg::Both => Convention::ALL.to_vec(),
    };
    let meter = Progress::new("count", progress && primes.len() > 1);
    let mut records = Vec::new();
    let mut all_matched = true;
    for (i, &p) in primes.iter().enumerate() {
        let brute = brute_count_surface_with(p, a.n, a.budget)?;
        let alg = trace_alg(p, a.n)?;
        let mut any = false;
        for &c in &conventions {
            let formula = formula_count_surface(p, a.n, c)?;
            let a_term = cubesum_core::pointcount::a_pn(p, a.n, c)?;
            any |= formula == brute;
            records.push(CountRecord {
                p: p.to_string(),
                n: a.n.to_string(),
                brute: brute.to_string(),
                formula: formula.to_string(),
                a_term_used: a_term.to_string(),
                convention: c.to_string(),
                matches: formula == brute,
                trace_alg: alg.to_string(),
            });
        }
        all_matched &= any;
        meter.tick(i as u64 + 1, primes.len() as u64);
    }
    let outcome = if all_matched { Outcome::Success } else { Outcome::CheckFailed };
    Ok((Output::records(&records), outcome))
}

fn verify_cmd(a: &VerifyArgs, progress: bool) -> Done {
    let only = if a.all { Vec::new() } else { a.checks.clone() };
    let opts = verify::Options { extended: a.extended };
    let report = verify::run(&only, &opts, |c| {
        if progress {
            eprintln!("verify: {} {} ({} ms)", c.name, c.status.as_str(), c.elapsed_ms);
        }
    });
    let plain = report
        .checks
        .iter()
        .map(|c| {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let mut line = format!("{status} {:>2} {:<22} {}", c.criterion, c.name, c.actual);
            if c.status == Status::Fail {
                line += &format!("\n        expected: {}", c.expected);
            }
            line
        })
        .chain(std::iter::once(format!(
            "{} passed, {} failed, {} skipped",
            report.passed, report.failed, report.skipped
        )))
        .collect::<Vec<_>>()
        .join("\n");
    let table = Table::from_records(&serde_json::to_value(&report.checks)?);
    let outcome = if report.all_pass() { Outcome::Success } else { Outcome::CheckFailed };
    Ok((Output::single(&report, plain).with_table(table), outcome))
}

fn cache_record(c: &cache::CacheContents, with_coefficients: bool) -> CacheRecord {
    CacheRecord {
        version: c.version.clone(),
        convention: c.convention.clone(),
        max: c.max.to_string(),
        coefficients: if with_coefficients {
            c.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, a)| CoefficientRecord { n: n.to_string(), a_n: a.to_string() })
                .collect()
        } else {
            Vec::new()
        },
    }
}

fn cache_cmd(c: &CacheCommand, cache: &CoefficientCache) -> Done {
    match c {
        CacheCommand::Build { max } => {
            if *max == 0 {
                return Err(usage("--max must be at least 1"));
            }
            let contents = cache.build(*max)?;
            let plain = format!("wrote a_1..a_{max} to {}", cache.path().display());
            ok(Output::single(&cache_record(&contents, false), plain))
        }
        CacheCommand::Show => {
            let contents = cache
                .load()
                .with_context(|| format!("reading {}", cache.path().display()))?
                .ok_or_else(|| usage(format!("no cache at {}", cache.path().display())))?;
            let record = cache_record(&contents, true);
            let plain = std::iter::once(format!(
                "cubesum-cache {} convention={} max={}",
                record.version, record.convention, record.max
            ))
            .chain(record.coefficients.iter().filter(|c| c.a_n != "0").map(|c| format!("{} {}", c.n, c.a_n)))
            .collect::<Vec<_>>()
            .join("\n");
            let table = Table::from_records(&serde_json::to_value(&record.coefficients)?);
            ok(Output::single(&record, plain).with_table(table))
        }
        CacheCommand::Clear => {
            let removed = cache.clear()?;
            let record = serde_json::json!({ "removed": removed });
            let plain = if removed { "cache removed" } else { "no cache to remove" };
            ok(Output::single(&record, plain.into()))
        }
        CacheCommand::Path => {
            let path = cache.path().display().to_string();
            ok(Output::single(&serde_json::json!({ "path": path }), path))
        }
    }
}

