//! Running identity suites from code.

use grothendieck::verify::{run, Suite, VerifyOptions};

fn main() {
    let opts = VerifyOptions { n: 2, trials: 50, seed: 7, ..Default::default() };
    let mut failed = false;
    for suite in Suite::ALL {
        let report = run(suite, &opts);
        print!("{report}");
        failed |= !report.passed();
    }
    if failed {
        std::process::exit(3);
    }
}
