//! Cross-checks the closed-form homology order against the determinant
//! of the abelianized fundamental-group presentation.
//!
//! The presentation for invariants `(b; b1/a1, ..., bn/an)` has
//! generators `x_1, ..., x_n, h` and abelianized relations
//! `a_i x_i + b_i h = 0` and `x_1 + ... + x_n - b h = 0`; the homology
//! order is the absolute determinant of the relation matrix.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use seifert_net_core::classify::surgered_invariants;
use seifert_net_core::sfs::SeifertInvariants;

fn determinant(matrix: &[Vec<i128>]) -> i128 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return matrix[0][0];
    }
    let mut total = 0i128;
    for (col, &entry) in matrix[0].iter().enumerate() {
        if entry == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total += sign * entry * determinant(&minor);
    }
    total
}

fn presentation_order(invariants: &SeifertInvariants) -> u64 {
    let fibers = invariants.fibers();
    let n = fibers.len();
    let mut matrix = vec![vec![0i128; n + 1]; n + 1];
    for (i, fiber) in fibers.iter().enumerate() {
        matrix[i][i] = fiber.alpha as i128;
        matrix[i][n] = fiber.beta as i128;
    }
    for col in 0..n {
        matrix[n][col] = 1;
    }
    matrix[n][n] = -(invariants.b() as i128);
    u64::try_from(determinant(&matrix).unsigned_abs()).unwrap()
}

fn inv(b: i64, pairs: &[(i64, i64)]) -> SeifertInvariants {
    SeifertInvariants::new(b, pairs).unwrap()
}

#[test]
fn oracle_reproduces_known_lens_orders() {
    assert_eq!(presentation_order(&inv(0, &[(2, 1), (3, 1)])), 5);
    assert_eq!(presentation_order(&inv(-1, &[(2, 1), (3, 2)])), 1);
    assert_eq!(presentation_order(&inv(0, &[])), 0);
    assert_eq!(presentation_order(&inv(-2, &[(2, 1), (3, 2), (5, 4)])), 1);
    assert_eq!(presentation_order(&inv(3, &[])), 3);
    assert_eq!(presentation_order(&inv(0, &[(7, 3)])), 3);
}

#[test]
fn closed_form_matches_presentation_determinant_on_grids() {
    let pool: Vec<(i64, i64)> = vec![
        (1, 0),
        (1, -3),
        (2, 1),
        (2, -1),
        (3, 1),
        (3, 2),
        (4, 3),
        (5, 2),
        (5, -4),
        (6, 1),
        (7, 5),
        (9, -2),
    ];
    let mut cases = 0u64;
    for b in -4..=4 {
        for &f1 in &pool {
            let one = inv(b, &[f1]);
            assert_eq!(one.first_homology_order().unwrap(), presentation_order(&one));
            for &f2 in &pool {
                let two = inv(b, &[f1, f2]);
                assert_eq!(two.first_homology_order().unwrap(), presentation_order(&two));
                for &f3 in &pool {
                    let three = inv(b, &[f1, f2, f3]);
                    assert_eq!(
                        three.first_homology_order().unwrap(),
                        presentation_order(&three),
                        "b={b} fibers={f1:?},{f2:?},{f3:?}"
                    );
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 10_000);
}

#[test]
fn closed_form_matches_presentation_determinant_on_random_instances() {
    let mut rng = StdRng::seed_from_u64(0x5e1f);
    for _ in 0..10_000 {
        let b = rng.random_range(-20..=20);
        let count = rng.random_range(0..=5);
        let mut pairs = Vec::with_capacity(count);
        while pairs.len() < count {
            let alpha = rng.random_range(1..=30i64);
            let beta = rng.random_range(-30..=30i64);
            if num_integer::gcd(alpha, beta) == 1 {
                pairs.push((alpha, beta));
            }
        }
        let invariants = inv(b, &pairs);
        assert_eq!(
            invariants.first_homology_order().unwrap(),
            presentation_order(&invariants),
            "b={b} pairs={pairs:?}"
        );
    }
}

#[test]
fn surgery_invariants_agree_with_the_determinant_oracle() {
    for q in 2..=7i64 {
        for p in (q + 1)..=20 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            for signed_p in [p, -p] {
                let pq = signed_p * q;
                for m in (pq - 12)..=(pq + 12) {
                    if m == pq {
                        continue;
                    }
                    let invariants = surgered_invariants(signed_p, q, m).unwrap();
                    assert_eq!(
                        presentation_order(&invariants),
                        m.unsigned_abs(),
                        "T({signed_p},{q}) at {m}"
                    );
                }
            }
        }
    }
}
