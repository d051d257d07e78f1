use clap::Args;
use pbounded::bar::{codifferential, probe_p_bounded, Bound, Cochain, Probe, Samples};
use pbounded::gs::gs_cochain;
use pbounded::homotopy::random_cochain;
use pbounded::rational::{parse_pq, to_pq};
use pbounded::thompson::{f, g, parse_element, random_word, rank_four_images};
use pbounded::{FPrime, Group};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{finite_element, split_list};
use crate::groups::{parse_group, GroupSpec};
use crate::report::{usage, Check, RunReport, Table};

#[derive(Args, Debug)]
pub struct ProbeArgs {
    #[arg(long, default_value = "fprime")]
    group: String,
    /// gs (fprime) | random-coboundary | random (finite) | constant:<p/q>
    #[arg(long)]
    cocycle: String,
    /// Number of leading arguments that vary.
    #[arg(long, default_value_t = 1)]
    p: usize,
    /// Fixed trailing arguments, comma separated (elements, labels or F' expressions).
    #[arg(long, default_value = "")]
    tail: String,
    /// Degree of random and constant cochains (gs has degree 2).
    #[arg(long, default_value_t = 2)]
    degree: usize,
    /// `all` (finite groups) or the number of sampled p-tuples.
    #[arg(long, default_value = "all")]
    samples: String,
}

fn bound_name(b: Bound) -> &'static str {
    match b {
        Bound::Exact => "exact",
        Bound::LowerBound => "lower-bound",
    }
}

fn record(report: &mut RunReport, probe: &Probe) {
    report.set("sup", to_pq(&probe.sup));
    report.set("bound", bound_name(probe.bound));
    report.set("evaluated", probe.evaluated);
}

fn table(rows: Vec<Vec<String>>) -> Table {
    Table {
        header: ["samples", "sup", "bound"].map(String::from).to_vec(),
        rows,
    }
}

fn sample_count(s: &str) -> anyhow::Result<Option<usize>> {
    if s == "all" {
        return Ok(None);
    }
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(Some(n)),
        _ => usage(format!(
            "--samples must be `all` or a positive integer, got {s:?}"
        )),
    }
}

/// Sups over the nested prefixes `n/8, n/4, n/2, n` of one sample list.
fn running<G: Group>(
    report: &mut RunReport,
    group: &G,
    omega: &Cochain<G::Elem>,
    p: usize,
    tail: &[G::Elem],
    list: Vec<Vec<G::Elem>>,
) -> anyhow::Result<()> {
    let n = list.len();
    let mut sizes: Vec<usize> = [n / 8, n / 4, n / 2, n]
        .into_iter()
        .filter(|&k| k > 0)
        .collect();
    sizes.dedup();
    let mut sups = Vec::new();
    let mut last = None;
    for k in sizes {
        let probe = probe_p_bounded(group, omega, p, tail, &Samples::List(list[..k].to_vec()))?;
        sups.push((k, probe.sup.clone()));
        last = Some(probe);
    }
    let monotone = sups.windows(2).all(|w| w[0].1 <= w[1].1);
    let rows = sups
        .iter()
        .map(|(k, s)| {
            vec![
                k.to_string(),
                to_pq(s),
                bound_name(Bound::LowerBound).into(),
            ]
        })
        .collect();
    let sups: Vec<_> = sups
        .iter()
        .map(|(k, s)| serde_json::json!({"samples": k, "sup": to_pq(s)}))
        .collect();
    report.set("running", sups);
    report.check(Check::new("running_bounds_monotone", monotone));
    report.table = Some(table(rows));
    record(report, &last.expect("at least one sample"));
    Ok(())
}

pub fn run(args: &ProbeArgs, seed: u64) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new("probe");
    report.set_param("group", &args.group);
    report.set_param("cocycle", &args.cocycle);
    report.set_param("p", args.p);
    report.set_param("tail", &args.tail);
    report.set_param("samples", &args.samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = sample_count(&args.samples)?;
    let tail_src = split_list(&args.tail);
    let const_value = match args.cocycle.strip_prefix("constant:") {
        Some(c) => Some(parse_pq(c).map_err(|e| crate::report::UsageError(e.to_string()))?),
        None => None,
    };
    let degree = if args.cocycle == "gs" { 2 } else { args.degree };
    report.set_param("degree", degree);
    if args.p == 0 || args.p + tail_src.len() != degree {
        return usage(format!(
            "p + |tail| must equal the degree: {} + {} != {degree}",
            args.p,
            tail_src.len()
        ));
    }

    match parse_group(&args.group)? {
        GroupSpec::Finite(group) => {
            let tail = tail_src
                .iter()
                .map(|s| finite_element(&group, s))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let omega = match (args.cocycle.as_str(), &const_value) {
                (_, Some(c)) => Cochain::constant(degree, c.clone()),
                ("random", _) => random_cochain(&group, degree, &mut rng),
                ("random-coboundary", _) => {
                    let eta = random_cochain(&group, degree - 1, &mut rng);
                    codifferential(&group, &eta).materialize(&group)
                }
                (other, _) => {
                    return usage(format!(
                        "cocycle {other:?} is not available on {}",
                        group.name()
                    ))
                }
            };
            match count {
                None => {
                    let probe = probe_p_bounded(&group, &omega, args.p, &tail, &Samples::All)?;
                    report.table = Some(table(vec![vec![
                        probe.evaluated.to_string(),
                        to_pq(&probe.sup),
                        bound_name(probe.bound).into(),
                    ]]));
                    record(&mut report, &probe);
                }
                Some(n) => {
                    let list: Vec<Vec<usize>> = (0..n)
                        .map(|_| {
                            (0..args.p)
                                .map(|_| rng.gen_range(0..group.order()))
                                .collect()
                        })
                        .collect();
                    running(&mut report, &group, &omega, args.p, &tail, list)?;
                }
            }
        }
        GroupSpec::FPrime => {
            let Some(n) = count else {
                return usage("F' is infinite: --samples must be a number");
            };
            let tail = tail_src
                .iter()
                .map(|s| parse_element(s))
                .collect::<Result<Vec<_>, _>>()?;
            let omega = match (args.cocycle.as_str(), &const_value) {
                (_, Some(c)) => Cochain::constant(degree, c.clone()),
                ("gs", _) => {
                    if let Some(t) = tail.iter().find(|t| !t.is_in_f_prime()) {
                        return usage(format!("tail element {t} is not in F'"));
                    }
                    gs_cochain()
                }
                (other, _) => {
                    return usage(format!("cocycle {other:?} is not available on fprime"))
                }
            };
            let mut gens = vec![f(), g()];
            gens.extend(rank_four_images());
            let list: Vec<_> = (0..n)
                .map(|_| {
                    (0..args.p)
                        .map(|_| random_word(&mut rng, &gens, 6))
                        .collect()
                })
                .collect();
            running(&mut report, &FPrime, &omega, args.p, &tail, list)?;
        }
        GroupSpec::FreeAbelian(z) => {
            let Some(n) = count else {
                return usage("free abelian groups are infinite: --samples must be a number");
            };
            let Some(c) = const_value else {
                return usage("only constant:<c> cochains are available on free abelian groups");
            };
            let tail = tail_src
                .iter()
                .map(|s| parse_vector(s, z.dim()))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let omega = Cochain::constant(degree, c);
            let list: Vec<Vec<Vec<i64>>> = (0..n)
                .map(|_| {
                    (0..args.p)
                        .map(|_| (0..z.dim()).map(|_| rng.gen_range(-10..=10)).collect())
                        .collect()
                })
                .collect();
            running(&mut report, &z, &omega, args.p, &tail, list)?;
        }
    }
    Ok(report)
}

/// `3:-1:0` → `[3, -1, 0]`.
fn parse_vector(s: &str, dim: usize) -> anyhow::Result<Vec<i64>> {
    let v: Result<Vec<i64>, _> = s.split(':').map(str::parse).collect();
    match v {
        Ok(v) if v.len() == dim => Ok(v),
        _ => usage(format!(
            "{s:?} is not an element of z{dim}; write coordinates as a:b:c"
        )),
    }
}
