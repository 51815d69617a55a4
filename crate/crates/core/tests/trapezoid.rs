mod common;

use common::oracle_gf_capped;
use tetraposet::ideal::{count_ideals, rank_gf};
use tetraposet::suite::trapezoid_counts;
use tetraposet::{ColorSet, ColoredPoset};

fn gog() -> ColorSet {
    "bgoy".parse().unwrap()
}

fn magog() -> ColorSet {
    "rgoy".parse().unwrap()
}

#[test]
fn truncation_sizes() {
    let t4 = ColoredPoset::build_tetra(4);
    let sizes: Vec<usize> = (0..4)
        .map(|k| t4.truncate_trapezoid(k).unwrap().len())
        .collect();
    assert_eq!(sizes, [10, 9, 6, 0]);
    assert!(t4.truncate_trapezoid(4).is_err());
    assert!(ColoredPoset::build_pyramid(4)
        .truncate_trapezoid(1)
        .is_err());
}

#[test]
fn truncated_posets_match_oracle() {
    for s in [gog(), magog()] {
        for n in 1..=5 {
            for k in 0..n {
                let p = ColoredPoset::tetra(n, s).truncate_trapezoid(k).unwrap();
                let want = oracle_gf_capped(n, s, false, n as i32 - 2 - k as i32);
                assert_eq!(rank_gf(&p), want, "{s} n={n} k={k}");
            }
        }
    }
}

#[test]
fn gog_equals_magog_through_five() {
    for n in 1..=5 {
        for k in 0..n {
            let (a, b) = trapezoid_counts(n, k);
            assert_eq!(a, b, "n={n} k={k}");
            let full = count_ideals(&ColoredPoset::tetra(n, gog()).truncate_trapezoid(k).unwrap());
            assert_eq!(a, full);
        }
    }
}

#[test]
fn untruncated_end_is_asm_count() {
    let asm = [1u32, 2, 7, 42, 429];
    for n in 1..=5 {
        assert_eq!(trapezoid_counts(n, 0).0, asm[n - 1].into());
        assert_eq!(trapezoid_counts(n, n - 1).0, 1u32.into());
    }
}
