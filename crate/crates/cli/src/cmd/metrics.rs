use clap::Args;
use pbounded::bar::{codifferential, Bound, Cochain};
use pbounded::gs::gs_cochain;
use pbounded::homotopy::random_cochain;
use pbounded::metrics::{
    abs_function, abs_length, abs_osc_norm, coboundary_stability, compare_constructions,
    integer_window, lipschitz_length, osc_norm, pseudometric_check, Domain,
};
use pbounded::rational::{rat, to_pq};
use pbounded::thompson::{random_word, rank_four_images};
use pbounded::{FPrime, FiniteGroup, Group};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::groups::{parse_group, GroupSpec};
use crate::report::{usage, Check, RunReport, Table};

/// Group orders up to which the four-fold expansion identity is checked exhaustively.
const EXPAND_LIMIT: usize = 24;

#[derive(Args, Debug)]
pub struct MetricsArgs {
    #[arg(long)]
    group: String,
    /// zero | random-coboundary (finite) | delta-abs (z1) | gs (fprime)
    #[arg(long)]
    cocycle: String,
    /// Sample size for sampled suprema (F' words, or the half-width of the ℤ window).
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Rows g in [-radius, radius] for z1.
    #[arg(long, default_value_t = 10)]
    radius: i64,
}

fn mode(b: Bound) -> String {
    match b {
        Bound::Exact => "exact".into(),
        Bound::LowerBound => "lower-bound".into(),
    }
}

fn table() -> Table {
    Table {
        header: ["g", "norm", "length", "mode"].map(String::from).to_vec(),
        rows: Vec::new(),
    }
}

pub fn run(args: &MetricsArgs, seed: u64) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new("metrics");
    report.set_param("group", &args.group);
    report.set_param("cocycle", &args.cocycle);
    report.set_param("samples", args.samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match (parse_group(&args.group)?, args.cocycle.as_str()) {
        (GroupSpec::Finite(g), "zero") => finite(&mut report, &g, &Cochain::zero(1)),
        (GroupSpec::Finite(g), "random-coboundary") => {
            let phi = random_cochain(&g, 1, &mut rng);
            finite(&mut report, &g, &phi);
            let eta = random_cochain(&g, 1, &mut rng);
            let omega = codifferential(&g, &phi).materialize(&g);
            let st = coboundary_stability(&g, &omega, &eta);
            report.check(
                Check::new("stability", st.holds)
                    .value(&st.max_deviation)
                    .detail(format!("bound 2|eta|_osc = {}", to_pq(&st.bound))),
            );
        }
        (GroupSpec::FreeAbelian(z), "delta-abs") if z.dim() == 1 => {
            report.set_param("radius", args.radius);
            let window = integer_window(args.samples as i64);
            let phi = abs_function();
            let d = codifferential(&z, &phi);
            let mut t = table();
            let mut mismatch = None;
            for k in -args.radius..=args.radius {
                let g = vec![k];
                if k.unsigned_abs() as usize <= args.samples {
                    let n = osc_norm(&d, &g, &window).value;
                    let l = lipschitz_length(&z, &phi, &g, &window).value;
                    if (n != abs_osc_norm(k) || l != abs_length(k)) && mismatch.is_none() {
                        mismatch = Some(vec![k.to_string()]);
                    }
                }
                t.rows.push(vec![
                    k.to_string(),
                    to_pq(&abs_osc_norm(k)),
                    to_pq(&abs_length(k)),
                    "exact".into(),
                ]);
            }
            report.check(
                Check::new("closed_form_matches_window", mismatch.is_none())
                    .counterexample(mismatch)
                    .detail(format!("h in [-{0}, {0}]", args.samples)),
            );
            let rows: Vec<Vec<i64>> = (-args.radius..=args.radius).map(|k| vec![k]).collect();
            let cmp = compare_constructions(&z, &phi, &rows, &window);
            report.check(Check::new("norm_at_most_twice_length", cmp.holds));
            if let Some((lo, hi)) = cmp.ratio_range {
                report.check(Check::new("bound_is_tight", lo == rat(2) && hi == rat(2)).value(&hi));
            }
            report.set_table(t);
        }
        (GroupSpec::FreeAbelian(z), "zero") => {
            let mut t = table();
            t.rows.push(vec![z.label(&z.identity()), "0/1".into(), "0/1".into(), "exact".into()]);
            for i in 0..z.dim() {
                t.rows.push(vec![z.label(&z.basis(i)), "0/1".into(), "0/1".into(), "exact".into()]);
            }
            report.set_table(t);
        }
        (GroupSpec::FPrime, c @ ("gs" | "zero")) => {
            let gens = rank_four_images();
            let sample: Vec<_> = (0..args.samples).map(|_| random_word(&mut rng, &gens, 6)).collect();
            let domain = Domain::sampled(sample);
            let omega = if c == "gs" { gs_cochain() } else { Cochain::zero(2) };
            let names = ["f*1", "g*1", "1*f", "1*g"];
            let mut t = table();
            for (name, w) in names.iter().zip(&gens) {
                let n = osc_norm(&omega, w, &domain);
                t.rows.push(vec![name.to_string(), to_pq(&n.value), String::new(), mode(n.bound)]);
            }
            let product = FPrime.multiply(&gens[0], &gens[3]);
            let n = osc_norm(&omega, &product, &domain);
            t.rows.push(vec!["(f*1).(1*g)".into(), to_pq(&n.value), String::new(), mode(n.bound)]);
            report.set_table(t);
        }
        (_, other) => {
            return usage(format!(
                "cocycle {other:?} is not available on {}; use zero, random-coboundary (c<n>, s<n>), delta-abs (z1) or gs (fprime)",
                args.group
            ))
        }
    }
    Ok(report)
}

/// Exact table and axiom checks for `ω = δφ` on a finite group.
fn finite(report: &mut RunReport, group: &FiniteGroup, phi: &Cochain<usize>) {
    let domain = Domain::finite(group).expect("finite");
    let omega = codifferential(group, phi).materialize(group);
    let cmp = compare_constructions(group, phi, group.all(), &domain);
    let mut t = table();
    for r in &cmp.rows {
        t.rows.push(vec![
            group.label(&r.g),
            to_pq(&r.norm),
            to_pq(&r.length),
            mode(cmp.bound),
        ]);
    }
    let ax = pseudometric_check(group, &omega, EXPAND_LIMIT);
    report.check(
        Check::new("pseudometric_axioms", ax.passed()).counterexample(ax.counterexample.clone()),
    );
    report.check(Check::new("expansion_identity", ax.expansion).detail(
        if group.order() <= EXPAND_LIMIT {
            "exhaustive"
        } else {
            "skipped: group too large"
        },
    ));
    report.check(Check::new("norm_at_most_twice_length", cmp.holds));
    report.set_table(t);
}
