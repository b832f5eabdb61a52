use std::process::ExitCode;

use kirillov::acceptance::{self, Options};

fn main() -> ExitCode {
    let opts = Options {
        slow: std::env::var_os("KIRILLOV_SLOW").is_some(),
    };
    let results = acceptance::run_all(&opts);
    for r in &results {
        println!("{}", r.line());
    }
    let mut ok = results.len() == 12;
    // the seed closed form carries a sign error on blocks of two or three
    // equal parts; the enumeration must still match the vertex weights exactly
    let seed = acceptance::seed_check(acceptance::SEED_INSTANCES, acceptance::SEED_RNG);
    ok &= seed.explained();
    ok &= results.iter().all(|r| r.passed || r.id == 4);
    ok &= results[3].passed == seed.closed_form_all_match();
    println!(
        "acceptance: {}/{} criteria pass; criterion 4 failure explained by block signs: {}",
        results.iter().filter(|r| r.passed).count(),
        results.len(),
        seed.explained()
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
