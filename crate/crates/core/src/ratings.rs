//! Elo ratings over round-grouped match data, plus the rank statistics
//! used to validate rankability against rating behaviour: Spearman
//! correlation, a late-round-weighted rating correlation, and backward
//! predictability of outcomes from final ratings.

use crate::error::{Error, Result};
use crate::ingest::{HomeSide, RoundSeries};

/// Elo update parameters. Conventional values: chess k = 40, xi = 400;
/// college football k = 32, xi = 1000. Everyone starts at
/// `initial_rating`; `home_advantage` is only consulted when predicting
/// outcomes, never during updates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EloConfig {
    pub k_factor: f64,
    pub xi: f64,
    pub initial_rating: f64,
    pub home_advantage: f64,
}

impl EloConfig {
    pub fn chess() -> Self {
        EloConfig {
            k_factor: 40.0,
            xi: 400.0,
            initial_rating: 0.0,
            home_advantage: 0.0,
        }
    }

    pub fn football() -> Self {
        EloConfig {
            k_factor: 32.0,
            xi: 1000.0,
            initial_rating: 0.0,
            home_advantage: 0.0,
        }
    }
}

/// How to score a predicted match whose entities have exactly equal
/// ratings: half credit (the rule determines no winner) or strictly
/// incorrect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiePolicy {
    HalfCredit,
    Incorrect,
}

/// Ratings per entity per round. Row 0 holds the initial ratings; row m
/// the ratings after round m. Rows are dense over 1..=max_round, so a
/// round in which an entity does not play repeats its rating.
#[derive(Debug, Clone, PartialEq)]
pub struct EloTable {
    entities: Vec<String>,
    ratings_by_round: Vec<Vec<f64>>,
}

impl EloTable {
    pub fn entities(&self) -> &[String] {
        &self.entities
    }

    pub fn rounds(&self) -> u32 {
        (self.ratings_by_round.len() - 1) as u32
    }

    /// Ratings after round `m`; row 0 is the initial vector.
    pub fn ratings_after(&self, m: u32) -> &[f64] {
        &self.ratings_by_round[m as usize]
    }

    /// Latest ratings.
    pub fn current(&self) -> &[f64] {
        self.ratings_by_round.last().expect("table has row 0")
    }
}

/// Expected score of the first player at rating difference `d`.
fn expected_score(d: f64, xi: f64) -> f64 {
    1.0 / (1.0 + 10f64.powf(-d / xi))
}

/// One Elo update from player i's perspective: i gains k(s - mu) and j
/// gains k((1-s) - mu') with mu' evaluated at the negated rating gap.
/// The two expected scores sum to one, so total rating is conserved.
pub fn elo_update(
    rating_i: f64,
    rating_j: f64,
    outcome_s: f64,
    cfg: &EloConfig,
) -> Result<(f64, f64)> {
    if !(outcome_s == 0.0 || outcome_s == 0.5 || outcome_s == 1.0) {
        return Err(Error::InvalidOutcome { value: outcome_s });
    }
    let d = rating_i - rating_j;
    let mu_i = expected_score(d, cfg.xi);
    let mu_j = expected_score(-d, cfg.xi);
    Ok((
        rating_i + cfg.k_factor * (outcome_s - mu_i),
        rating_j + cfg.k_factor * ((1.0 - outcome_s) - mu_j),
    ))
}

/// Run Elo over a whole series: matches in round order, file order within
/// a round, producing the full per-round rating history.
pub fn run_elo(series: &RoundSeries, cfg: &EloConfig) -> Result<EloTable> {
    let entities = series.entities().to_vec();
    let n = entities.len();
    let mut current = vec![cfg.initial_rating; n];
    let mut rows = vec![current.clone()];
    for round in 1..=series.max_round() {
        for rec in series.records_in_round(round) {
            let i = series
                .entity_id(&rec.entity_a)
                .ok_or_else(|| Error::UnknownEntity {
                    name: rec.entity_a.clone(),
                    round,
                })?;
            let j = series
                .entity_id(&rec.entity_b)
                .ok_or_else(|| Error::UnknownEntity {
                    name: rec.entity_b.clone(),
                    round,
                })?;
            let s = rec.outcome_for_a();
            let (ri, rj) = elo_update(current[i], current[j], s, cfg)?;
            current[i] = ri;
            current[j] = rj;
        }
        rows.push(current.clone());
    }
    Ok(EloTable {
        entities,
        ratings_by_round: rows,
    })
}

/// Spearman rank correlation with average-rank tie handling: rank both
/// vectors, then take the Pearson correlation of the ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::TooFewValues {
            needed: 2,
            got: x.len(),
        });
    }
    let rx = average_ranks(x)?;
    let ry = average_ranks(y)?;
    let n = rx.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (a, b) in rx.iter().zip(&ry) {
        cov += (a - mx) * (b - my);
        vx += (a - mx) * (a - mx);
        vy += (b - my) * (b - my);
    }
    if vx == 0.0 || vy == 0.0 {
        return Err(Error::ConstantVector);
    }
    Ok(cov / (vx * vy).sqrt())
}

fn average_ranks(v: &[f64]) -> Result<Vec<f64>> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::ConstantVector);
    }
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&a, &b| v[a].partial_cmp(&v[b]).unwrap());
    let mut ranks = vec![0.0; v.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && v[order[j + 1]] == v[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    Ok(ranks)
}

/// Season-level rating stability: y_m = spearman(x^(m), x^(m-1)) for
/// m = 2..r, combined as 2 sum (m-1) y_m / (r (r-1)). The m = 1 term
/// carries weight zero against the constant initial vector and is never
/// evaluated. Later rounds dominate the average.
pub fn rating_correlation(table: &EloTable) -> Result<f64> {
    let r = table.rounds();
    if r < 2 {
        return Err(Error::TooFewRounds { needed: 2, got: r });
    }
    let mut total = 0.0;
    for m in 2..=r {
        let y = spearman(table.ratings_after(m), table.ratings_after(m - 1))?;
        total += (m - 1) as f64 * y;
    }
    let r = r as f64;
    Ok(2.0 * total / (r * (r - 1.0)))
}

/// Fraction of decided matches whose winner has the higher final rating,
/// after adding `home_advantage` to the home entity's rating. Draws are
/// excluded from numerator and denominator (a binary winner-prediction
/// rule cannot score them); exact rating ties score according to `ties`.
pub fn backward_predictability_with_ties(
    table: &EloTable,
    series: &RoundSeries,
    cfg: &EloConfig,
    ties: TiePolicy,
) -> Result<f64> {
    if series.records().is_empty() {
        return Err(Error::EmptySeries);
    }
    let final_ratings = table.current();
    let mut decided = 0u32;
    let mut correct = 0.0f64;
    for rec in series.records() {
        if rec.score_a == rec.score_b {
            continue;
        }
        let i = series
            .entity_id(&rec.entity_a)
            .ok_or_else(|| Error::UnknownEntity {
                name: rec.entity_a.clone(),
                round: rec.round,
            })?;
        let j = series
            .entity_id(&rec.entity_b)
            .ok_or_else(|| Error::UnknownEntity {
                name: rec.entity_b.clone(),
                round: rec.round,
            })?;
        decided += 1;
        let mut ra = final_ratings[i];
        let mut rb = final_ratings[j];
        match rec.home {
            Some(HomeSide::A) => ra += cfg.home_advantage,
            Some(HomeSide::B) => rb += cfg.home_advantage,
            _ => {}
        }
        let a_won = rec.score_a > rec.score_b;
        if ra == rb {
            if ties == TiePolicy::HalfCredit {
                correct += 0.5;
            }
        } else if (ra > rb) == a_won {
            correct += 1.0;
        }
    }
    if decided == 0 {
        return Err(Error::NoDecidedMatches);
    }
    Ok(correct / decided as f64)
}

/// [`backward_predictability_with_ties`] with the default half-credit
/// policy for exact rating ties.
pub fn backward_predictability(
    table: &EloTable,
    series: &RoundSeries,
    cfg: &EloConfig,
) -> Result<f64> {
    backward_predictability_with_ties(table, series, cfg, TiePolicy::HalfCredit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::parse_matches;

    #[test]
    fn elo_update_basic_cases() {
        let cfg = EloConfig::chess();
        let (a, b) = elo_update(0.0, 0.0, 1.0, &cfg).unwrap();
        assert_eq!((a, b), (20.0, -20.0));
        let (a, b) = elo_update(0.0, 0.0, 0.5, &cfg).unwrap();
        assert_eq!((a, b), (0.0, 0.0));
        assert!(matches!(
            elo_update(0.0, 0.0, 0.7, &cfg),
            Err(Error::InvalidOutcome { .. })
        ));
    }

    #[test]
    fn expected_score_closed_form() {
        // d = 400 at xi = 400 gives mu = 10/11.
        let mu = expected_score(400.0, 400.0);
        assert!((mu - 10.0 / 11.0).abs() < 1e-15);
        assert_eq!(expected_score(0.0, 400.0), 0.5);
    }

    #[test]
    fn elo_is_zero_sum() {
        let cfg = EloConfig::chess();
        for d in [-900.0, -37.5, 0.0, 12.0, 445.0] {
            for s in [0.0, 0.5, 1.0] {
                let (a, b) = elo_update(100.0 + d, 100.0, s, &cfg).unwrap();
                let total = a + b - (200.0 + d);
                assert!(total.abs() < 1e-12, "drift {total} at d={d}, s={s}");
            }
        }
    }

    #[test]
    fn winner_gain_decreases_with_rating_gap() {
        let cfg = EloConfig::chess();
        let mut last = f64::INFINITY;
        for d in [-400.0, -100.0, 0.0, 100.0, 400.0] {
            let (a, _) = elo_update(d, 0.0, 1.0, &cfg).unwrap();
            let gain = a - d;
            assert!(gain < last);
            assert!(gain > 0.0);
            last = gain;
        }
    }

    #[test]
    fn run_elo_history_shape() {
        let series = parse_matches(
            "round,entity_a,entity_b,score_a,score_b\n\
             1,A,B,1,0\n\
             2,A,B,0.5,0.5\n",
        )
        .unwrap();
        let cfg = EloConfig::chess();
        let table = run_elo(&series, &cfg).unwrap();
        assert_eq!(table.rounds(), 2);
        assert_eq!(table.ratings_after(0), &[0.0, 0.0]);
        assert_eq!(table.ratings_after(1), &[20.0, -20.0]);
        // Round 2 draw: higher-rated A concedes a little.
        assert!(table.ratings_after(2)[0] < 20.0);
        assert_eq!(run_elo(&parse_matches("round,entity_a,entity_b,score_a,score_b\n").unwrap(), &cfg)
            .unwrap()
            .rounds(), 0);
    }

    #[test]
    fn spearman_basics_and_errors() {
        assert_eq!(spearman(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0]).unwrap(), 1.0);
        assert_eq!(spearman(&[1.0, 2.0, 3.0], &[5.0, 1.0, -2.0]).unwrap(), -1.0);
        assert!(matches!(
            spearman(&[1.0, 2.0], &[1.0]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            spearman(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(Error::ConstantVector)
        ));
    }

    #[test]
    fn spearman_tie_handling_uses_average_ranks() {
        // x has a two-way tie; average ranks give 3/sqrt(10).
        let x = [1.0, 1.0, 2.0, 3.0];
        let y = [1.0, 2.0, 3.0, 4.0];
        let r = spearman(&x, &y).unwrap();
        assert!((r - 3.0 / 10.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn spearman_invariant_under_monotone_transform() {
        let x = [0.3, -2.0, 5.5, 1.25, 0.0];
        let y = [4.0, 1.0, 2.5, 3.0, -1.0];
        let base = spearman(&x, &y).unwrap();
        let fx: Vec<f64> = x.iter().map(|v| v.exp()).collect();
        let gy: Vec<f64> = y.iter().map(|v| 3.0 * v + 7.0).collect();
        assert!((spearman(&fx, &gy).unwrap() - base).abs() < 1e-12);
    }

    #[test]
    fn rating_correlation_of_stable_rankings_is_one() {
        // A beats B beats C every round; rankings never change after
        // round 1, and every pairwise comparison keeps its order.
        let series = parse_matches(
            "round,entity_a,entity_b,score_a,score_b\n\
             1,A,B,1,0\n1,C,D,1,0\n\
             2,A,B,1,0\n2,C,D,1,0\n\
             3,A,B,1,0\n3,C,D,1,0\n",
        )
        .unwrap();
        let table = run_elo(&series, &EloConfig::chess()).unwrap();
        let c = rating_correlation(&table).unwrap();
        assert!((c - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rating_correlation_needs_two_rounds() {
        let series = parse_matches("round,entity_a,entity_b,score_a,score_b\n1,A,B,1,0\n").unwrap();
        let table = run_elo(&series, &EloConfig::chess()).unwrap();
        assert!(matches!(
            rating_correlation(&table),
            Err(Error::TooFewRounds { .. })
        ));
    }

    #[test]
    fn backward_predictability_perfect_and_draw_exclusion() {
        let series = parse_matches(
            "round,entity_a,entity_b,score_a,score_b\n\
             1,A,B,1,0\n1,C,D,0.5,0.5\n2,A,C,1,0\n",
        )
        .unwrap();
        let cfg = EloConfig::chess();
        let table = run_elo(&series, &cfg).unwrap();
        // Decided matches: A>B and A>C, both won by the higher-rated side.
        let p = backward_predictability(&table, &series, &cfg).unwrap();
        assert_eq!(p, 1.0);
    }

    #[test]
    fn backward_predictability_tie_policies() {
        // B and C never play a decided match against each other and end tied.
        let series = parse_matches(
            "round,entity_a,entity_b,score_a,score_b\n\
             1,B,C,0.5,0.5\n2,B,C,0.5,0.5\n",
        )
        .unwrap();
        let cfg = EloConfig::chess();
        let table = run_elo(&series, &cfg).unwrap();
        assert!(matches!(
            backward_predictability(&table, &series, &cfg),
            Err(Error::NoDecidedMatches)
        ));

        // A decided match whose prediction is an exact tie: the home bonus
        // equals the final rating gap.
        let series = parse_matches(
            "round,entity_a,entity_b,score_a,score_b,home\n1,A,B,1,0,b\n",
        )
        .unwrap();
        let mut cfg = EloConfig::chess();
        cfg.home_advantage = 40.0;
        let table = run_elo(&series, &cfg).unwrap();
        let half =
            backward_predictability_with_ties(&table, &series, &cfg, TiePolicy::HalfCredit).unwrap();
        let strict =
            backward_predictability_with_ties(&table, &series, &cfg, TiePolicy::Incorrect).unwrap();
        assert_eq!(half, 0.5);
        assert_eq!(strict, 0.0);
    }

    #[test]
    fn home_advantage_flips_predictions() {
        let series = parse_matches(
            "round,entity_a,entity_b,score_a,score_b,home\n\
             1,A,B,1,0,a\n2,A,B,1,0,a\n3,B,A,1,0,b\n",
        )
        .unwrap();
        let cfg = EloConfig::football();
        let table = run_elo(&series, &cfg).unwrap();
        let p0 = backward_predictability(&table, &series, &cfg).unwrap();
        // A ends rated above B, so A's two wins predict and B's one does not.
        assert!((p0 - 2.0 / 3.0).abs() < 1e-12);
        let mut boosted = cfg;
        boosted.home_advantage = 1e4;
        let p1 = backward_predictability(&table, &series, &boosted).unwrap();
        // A huge home bonus makes every home side the predicted winner.
        assert!((p1 - 1.0) < 1e-12);
    }
}
