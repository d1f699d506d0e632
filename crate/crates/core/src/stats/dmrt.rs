//! Duncan's multiple range test and letter grouping.

use alloc::string::String;
use alloc::vec::Vec;

use super::anova::AnovaTable;
use super::duncan_table::{MAX_DF, MAX_SPAN, SSR_05};
use super::StatsError;

/// Duncan significant studentized range for `span` ordered means and `df`
/// error degrees of freedom. Only `alpha = 0.05` is tabulated; beyond 120 df
/// the value is interpolated linearly in `1/df` toward the infinite-df row.
pub fn duncan_ssr(span: usize, df: u32, alpha: f64) -> Result<f64, StatsError> {
    if (alpha - 0.05).abs() > 1e-12 {
        return Err(StatsError::UnsupportedAlpha(alpha));
    }
    if !(2..=MAX_SPAN).contains(&span) {
        return Err(StatsError::InvalidInput("Duncan span must be within 2..=20"));
    }
    if df == 0 {
        return Err(StatsError::InvalidInput("error degrees of freedom must be >= 1"));
    }
    let col = span - 2;
    let df = df as usize;
    if df <= MAX_DF {
        return Ok(SSR_05[df - 1][col]);
    }
    let at_max = SSR_05[MAX_DF - 1][col];
    let at_inf = SSR_05[MAX_DF][col];
    let w = (MAX_DF as f64) / (df as f64);
    Ok(at_inf + (at_max - at_inf) * w)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DmrtGrouping {
    /// Letters per treatment, in input order.
    pub letters: Vec<String>,
    /// Treatment indices from the highest mean to the lowest.
    pub order: Vec<usize>,
    pub sorted_means: Vec<f64>,
    /// `(span, critical range)` for spans 2..=k.
    pub critical_ranges: Vec<(usize, f64)>,
}

impl DmrtGrouping {
    /// Number of distinct letters.
    pub fn group_count(&self) -> usize {
        let mut seen: Vec<char> = self.letters.iter().flat_map(|s| s.chars()).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn critical_range(&self, span: usize) -> Option<f64> {
        self.critical_ranges.iter().find(|(p, _)| *p == span).map(|(_, r)| *r)
    }

    /// Everyone shares one letter.
    pub fn single_group(k: usize, means: &[f64]) -> Self {
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|a, b| means[*b].total_cmp(&means[*a]));
        DmrtGrouping {
            letters: alloc::vec![String::from("A"); k],
            sorted_means: order.iter().map(|i| means[*i]).collect(),
            order,
            critical_ranges: Vec::new(),
        }
    }
}

/// Groups treatment means so that means sharing a letter are not
/// significantly different at `alpha`.
pub fn dmrt(
    means: &[f64],
    ms_err: f64,
    df_err: u32,
    n_per_mean: usize,
    alpha: f64,
) -> Result<DmrtGrouping, StatsError> {
    let k = means.len();
    if k < 2 {
        return Err(StatsError::TooFewTreatments(k));
    }
    if k > MAX_SPAN {
        return Err(StatsError::InvalidInput("at most 20 treatments are supported"));
    }
    if !(ms_err > 0.0 && ms_err.is_finite()) {
        return Err(StatsError::InvalidInput("error mean square must be > 0"));
    }
    if n_per_mean < 2 {
        return Err(StatsError::InvalidInput("each mean needs at least two observations"));
    }
    if means.iter().any(|m| !m.is_finite()) {
        return Err(StatsError::InvalidInput("means must be finite"));
    }
    let se = libm::sqrt(ms_err / n_per_mean as f64);
    let mut critical_ranges = Vec::with_capacity(k - 1);
    for span in 2..=k {
        critical_ranges.push((span, duncan_ssr(span, df_err, alpha)? * se));
    }
    let range = |span: usize| critical_ranges[span - 2].1;

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|a, b| means[*b].total_cmp(&means[*a]));
    let sorted: Vec<f64> = order.iter().map(|i| means[*i]).collect();

    // Widest non-significant range starting at each position; any range
    // inside a non-significant one is non-significant too.
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut reach = 0;
    for i in 0..k {
        let mut end = i;
        for j in (i + 1..k).rev() {
            if sorted[i] - sorted[j] < range(j - i + 1) {
                end = j;
                break;
            }
        }
        if i == 0 || end > reach {
            groups.push((i, end));
            reach = end;
        }
        reach = reach.max(end);
    }

    let mut letters = alloc::vec![String::new(); k];
    for (g, (lo, hi)) in groups.iter().enumerate() {
        let letter = letter_for(g);
        for pos in *lo..=*hi {
            letters[order[pos]].push(letter);
        }
    }
    Ok(DmrtGrouping {
        letters,
        order,
        sorted_means: sorted,
        critical_ranges,
    })
}

fn letter_for(g: usize) -> char {
    char::from(b'A' + (g % 26) as u8)
}

/// DMRT run only when the treatment F test rejects at `alpha`; otherwise
/// every treatment shares one letter.
pub fn protected_dmrt(
    table: &AnovaTable,
    means: &[f64],
    n_per_mean: usize,
    alpha: f64,
) -> Result<DmrtGrouping, StatsError> {
    let significant = table.treatment().test.is_some_and(|t| t.p() < alpha);
    let ms_err = table.error().ms.unwrap_or(0.0);
    if !significant || !(ms_err > 0.0) {
        if (alpha - 0.05).abs() > 1e-12 {
            return Err(StatsError::UnsupportedAlpha(alpha));
        }
        return Ok(DmrtGrouping::single_group(means.len(), means));
    }
    dmrt(means, ms_err, table.error().df, n_per_mean, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn published_table_spot_checks() {
        // Widely reproduced Duncan values at alpha 0.05.
        assert!((duncan_ssr(2, 10, 0.05).unwrap() - 3.151).abs() < 0.002);
        assert!((duncan_ssr(3, 10, 0.05).unwrap() - 3.293).abs() < 0.002);
        assert!((duncan_ssr(4, 10, 0.05).unwrap() - 3.376).abs() < 0.002);
        assert!((duncan_ssr(2, 1, 0.05).unwrap() - 17.97).abs() < 0.01);
        assert!((duncan_ssr(2, 1_000_000, 0.05).unwrap() - 2.772).abs() < 0.002);
        assert!(duncan_ssr(2, 10, 0.01).is_err());
    }

    #[test]
    fn interpolation_beyond_table_is_monotone() {
        let a = duncan_ssr(3, 120, 0.05).unwrap();
        let b = duncan_ssr(3, 240, 0.05).unwrap();
        let c = duncan_ssr(3, 100_000, 0.05).unwrap();
        assert!(a >= b && b >= c);
    }

    #[test]
    fn equal_means_single_group() {
        let g = dmrt(&[3.0, 3.0, 3.0, 3.0], 1.0, 27, 10, 0.05).unwrap();
        assert_eq!(g.group_count(), 1);
        assert!(g.letters.iter().all(|l| l == "A"));
    }

    #[test]
    fn two_close_one_far() {
        // se = sqrt(0.04 / 10) = 0.0632; ranges are about 0.18 to 0.19.
        let g = dmrt(&[10.0, 10.1, 20.0], 0.04, 27, 10, 0.05).unwrap();
        let r2 = g.critical_range(2).unwrap();
        let r3 = g.critical_range(3).unwrap();
        assert!(r2 > 0.1 && r3 < 9.9);
        assert!((0.17..0.2).contains(&r2), "{r2}");
        // Highest mean gets A.
        assert_eq!(g.letters, vec!["B", "B", "A"]);
        assert_eq!(g.group_count(), 2);
    }

    #[test]
    fn far_apart_pair() {
        let g = dmrt(&[5.0, 50.0], 1e-6, 9, 10, 0.05).unwrap();
        assert_eq!(g.letters, vec!["B", "A"]);
    }

    #[test]
    fn overlapping_groups() {
        // a-b and b-c not different, a-c different.
        let se = libm::sqrt(1.0 / 10.0);
        let r2 = duncan_ssr(2, 27, 0.05).unwrap() * se;
        let g = dmrt(&[10.0, 10.0 - 0.8 * r2, 10.0 - 1.6 * r2], 1.0, 27, 10, 0.05).unwrap();
        assert_eq!(g.letters, vec!["A", "AB", "B"]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(dmrt(&[1.0], 1.0, 9, 10, 0.05).is_err());
        assert!(dmrt(&[1.0, 2.0], 0.0, 9, 10, 0.05).is_err());
        assert!(dmrt(&[1.0, 2.0], 1.0, 9, 1, 0.05).is_err());
        assert!(matches!(dmrt(&[1.0, 2.0], 1.0, 9, 10, 0.1), Err(StatsError::UnsupportedAlpha(_))));
    }

    fn partition(g: &DmrtGrouping) -> Vec<Vec<usize>> {
        let mut letters: Vec<char> = g.letters.iter().flat_map(|s| s.chars()).collect();
        letters.sort_unstable();
        letters.dedup();
        let mut out: Vec<Vec<usize>> = letters
            .iter()
            .map(|c| (0..g.letters.len()).filter(|i| g.letters[*i].contains(*c)).collect())
            .collect();
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn letters_cover_and_respect_ranges(means in proptest::collection::vec(0.0f64..10.0, 2..8)) {
            let g = dmrt(&means, 1.0, 27, 10, 0.05).unwrap();
            prop_assert!(g.letters.iter().all(|l| !l.is_empty()));
            for group in partition(&g) {
                let vals: Vec<f64> = group.iter().map(|i| means[*i]).collect();
                let hi = vals.iter().cloned().fold(f64::MIN, f64::max);
                let lo = vals.iter().cloned().fold(f64::MAX, f64::min);
                if group.len() > 1 {
                    let span = g.sorted_means.iter().filter(|m| **m <= hi && **m >= lo).count();
                    prop_assert!(hi - lo < g.critical_range(span).unwrap());
                }
            }
        }

        #[test]
        fn partition_independent_of_input_order(means in proptest::collection::vec(0.0f64..10.0, 2..8), seed in any::<u64>()) {
            let g = dmrt(&means, 1.0, 27, 10, 0.05).unwrap();
            let k = means.len();
            let mut perm: Vec<usize> = (0..k).collect();
            let mut s = seed;
            for i in (1..k).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let shuffled: Vec<f64> = perm.iter().map(|i| means[*i]).collect();
            let h = dmrt(&shuffled, 1.0, 27, 10, 0.05).unwrap();
            let back: Vec<Vec<usize>> = partition(&h)
                .into_iter()
                .map(|grp| {
                    let mut v: Vec<usize> = grp.into_iter().map(|i| perm[i]).collect();
                    v.sort();
                    v
                })
                .collect();
            let mut back = back;
            back.sort();
            prop_assert_eq!(partition(&g), back);
        }
    }
}
