use pbounded::golden;
use pbounded::gs::{
    contribution_x, gs_evaluate, nonzero_contributions, zeta2_pairing, zeta4_pairing, zeta8_pairing,
};
use pbounded::rational::rat;
use pbounded::thompson::{f, g};

use crate::report::{Check, RunReport};

fn compare(report: &mut RunReport, name: &str, value: i64) {
    let expected = golden::get(name);
    let mut c = Check::new(name, expected == Some(value)).value(&rat(value));
    c = match expected {
        Some(e) => c.detail(format!("golden {e}")),
        None => c.detail("no golden value"),
    };
    report.set(name, value);
    report.check(c);
}

pub fn run() -> anyhow::Result<RunReport> {
    let mut report = RunReport::new("thompson-verify");
    let (f, g) = (f(), g());
    compare(&mut report, "alpha_fg", gs_evaluate(&f, &g)?);
    compare(&mut report, "alpha_gf", gs_evaluate(&g, &f)?);

    let xs: Vec<String> = nonzero_contributions(&f, &g)?
        .iter()
        .map(contribution_x)
        .collect();
    let single = xs == ["1/2"];
    report.check(
        Check::new("alpha_fg_contributions", single)
            .detail(format!("nonzero determinants at x = {}", xs.join(", "))),
    );
    report.set("alpha_fg_breakpoints", &xs);

    compare(&mut report, "zeta2", zeta2_pairing()?);
    compare(&mut report, "zeta4", zeta4_pairing()?);
    let z8 = zeta8_pairing()?;
    compare(&mut report, "zeta8", z8);
    report.check(Check::new("zeta8_nonzero", z8 != 0).value(&rat(z8)));
    Ok(report)
}
