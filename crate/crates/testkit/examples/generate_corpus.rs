//! Regenerates the checked-in corpora under `corpus/`.
//!
//! cargo run -p lti-bounded-testkit --example generate_corpus

use std::fs;
use std::path::Path;

use lti_bounded_testkit::gen::{continuous_factor, discrete_factor, random_root_spec, rng};
use lti_bounded_testkit::manifest::{format_manifest, CorpusEntry};
use lti_bounded_testkit::RootSpec;

const KERNEL_SEED: u64 = 0x6b65_726e;
const DISCRETE_SEED: u64 = 0x6469_7363;

const KERNEL_FIXED: &[&str] = &[
    "quad(-1,1,1)",
    "quad(0,1,1)",
    "quad(0,1,1)^2",
    "one",
    "lin(-1/1) quad(0,1,1)",
    "lin(0/1)",
    "lin(0/1)^2",
    "quad(0,1,1) quad(0,4,1)",
    "quad(0,1,1) quad(0,4,1)^2",
    "lin(-1/1)^10",
    "quad(0,9,1)^2 lin(-3/1)",
    "lin(0/1) quad(0,1,1) lin(-2/1)",
];

const DISCRETE_FIXED: &[&str] = &[
    "one",
    "one^2",
    "one^3",
    "one lin(-1/1)",
    "lin(1/2) one",
    "lin(1/2) one^2",
    "quad(1,3,2) one^3",
    "lin(-1/1)",
    "lin(-1/1)^2",
    "quad(0,1,1)",
    "quad(0,1,1)^2",
    "quad(3,16,5)",
    "quad(3,16,5)^2",
    "quad(1,3,2) quad(-1,3,2)",
    "quad(1,3,2)^2",
    "lin(2/1) lin(1/2)",
    "lin(3/1) lin(1/3) one",
    "lin(-1/2) lin(1/3)",
    "lin(0/1)^3",
    "quad(0,1,2)^2 lin(1/1)",
];

fn build(
    fixed: &[&str],
    seed: u64,
    count: usize,
    max_degree: usize,
    factor: fn(&mut rand_chacha::ChaCha8Rng) -> lti_bounded_testkit::Factor,
) -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = fixed
        .iter()
        .map(|s| CorpusEntry::from_spec(0, s.parse::<RootSpec>().expect("fixed spec")))
        .collect();
    for i in 0..count as u64 {
        let s = seed.wrapping_add(i);
        let spec = random_root_spec(&mut rng(s), max_degree, factor);
        out.push(CorpusEntry::from_spec(s, spec));
    }
    out
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    fs::create_dir_all(&dir).expect("create corpus dir");

    let kernel = build(KERNEL_FIXED, KERNEL_SEED, 320, 10, continuous_factor);
    let text = format_manifest(
        "root specs of degree <= 10; seed 0 marks a hand-written entry\nseed | spec | continuous | discrete",
        &kernel,
    );
    fs::write(dir.join("kernel_corpus.txt"), text).expect("write kernel corpus");

    let discrete = build(DISCRETE_FIXED, DISCRETE_SEED, 220, 8, discrete_factor);
    let text = format_manifest(
        "root specs of degree <= 8; seed 0 marks a hand-written entry\nseed | spec | continuous | discrete",
        &discrete,
    );
    fs::write(dir.join("discrete_corpus.txt"), text).expect("write discrete corpus");

    let yes = |v: &[CorpusEntry], f: fn(&CorpusEntry) -> bool| v.iter().filter(|e| f(e)).count();
    println!(
        "kernel_corpus.txt: {} entries, {} YES",
        kernel.len(),
        yes(&kernel, |e| e.continuous)
    );
    println!(
        "discrete_corpus.txt: {} entries, {} YES",
        discrete.len(),
        yes(&discrete, |e| e.discrete)
    );
}
