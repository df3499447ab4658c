//! Match-data ingestion: a small CSV format for round-grouped pairwise
//! results, digraph builders (winning-percentage or binary weights), and
//! round-by-round rankability series.
//!
//! CSV contract: UTF-8, LF or CRLF, first line a header containing at
//! least `round,entity_a,entity_b,score_a,score_b` (an optional `home`
//! column and any unknown columns are allowed; fields must not contain
//! commas).

use std::collections::HashMap;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rankability::{spec_r, RankabilityReport};

/// Which side of a match played at home, when the data records it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomeSide {
    A,
    B,
    Neutral,
}

/// One match between two entities in a numbered round. Scores are raw
/// (chess points or football points); outcomes reduce to win/draw/loss by
/// comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchRecord {
    pub round: u32,
    pub entity_a: String,
    pub entity_b: String,
    pub score_a: f64,
    pub score_b: f64,
    pub home: Option<HomeSide>,
}

impl MatchRecord {
    /// Match outcome from entity_a's perspective: 1 win, 0.5 draw, 0 loss.
    pub fn outcome_for_a(&self) -> f64 {
        if self.score_a > self.score_b {
            1.0
        } else if self.score_a < self.score_b {
            0.0
        } else {
            0.5
        }
    }
}

/// A parsed season: records sorted by (round, file order) and a stable
/// entity registry in order of first appearance.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundSeries {
    records: Vec<MatchRecord>,
    entities: Vec<String>,
    ids: HashMap<String, usize>,
    max_round: u32,
}

impl RoundSeries {
    pub fn records(&self) -> &[MatchRecord] {
        &self.records
    }

    pub fn records_in_round(&self, round: u32) -> impl Iterator<Item = &MatchRecord> {
        self.records.iter().filter(move |r| r.round == round)
    }

    pub fn entities(&self) -> &[String] {
        &self.entities
    }

    pub fn entity_id(&self, name: &str) -> Option<usize> {
        self.ids.get(name).copied()
    }

    pub fn max_round(&self) -> u32 {
        self.max_round
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Weighting scheme for [`build_digraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// w_ij = points of i against j through the requested round, divided
    /// by the number of games the pair plays across the whole series.
    /// Draws count as half a win for each side. This is the weighting the
    /// round-by-round rankability curves are defined over: each game
    /// contributes 1/(season games between the pair), so a half-played
    /// pairing carries half weight.
    WinningPercentage,
    /// w_ij = points of i against j divided by games the pair has played
    /// through the requested round. Weights of a played pairing always sum
    /// to one and a snapshot never changes when later rounds are appended.
    WinningPercentageSoFar,
    /// w_ij = 1 iff i beat j at least once; drawn matches are an error.
    Binary,
}

/// Parse match CSV text into a validated series.
pub fn parse_matches(text: &str) -> Result<RoundSeries> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let columns: Vec<&str> = header.trim_end_matches('\r').split(',').map(str::trim).collect();
    let find = |name: &str| -> Result<usize> {
        columns
            .iter()
            .position(|c| *c == name)
            .ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("header is missing required column {name:?}"),
            })
    };
    let col_round = find("round")?;
    let col_a = find("entity_a")?;
    let col_b = find("entity_b")?;
    let col_sa = find("score_a")?;
    let col_sb = find("score_b")?;
    let col_home = columns.iter().position(|c| *c == "home");

    let mut records = Vec::new();
    let mut entities: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut max_round = 0u32;

    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != columns.len() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {} fields, found {}", columns.len(), fields.len()),
            });
        }
        let round: u32 = fields[col_round].parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid round {:?}", fields[col_round]),
        })?;
        if round == 0 {
            return Err(Error::Parse {
                line: line_no,
                message: "rounds are numbered from 1".into(),
            });
        }
        let entity_a = fields[col_a].to_string();
        let entity_b = fields[col_b].to_string();
        if entity_a.is_empty() || entity_b.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                message: "empty entity name".into(),
            });
        }
        if entity_a == entity_b {
            return Err(Error::Parse {
                line: line_no,
                message: format!("self-match for entity {entity_a:?}"),
            });
        }
        let parse_score = |s: &str| -> Result<f64> {
            let v: f64 = s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid score {s:?}"),
            })?;
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("negative or non-finite score {s:?}"),
                });
            }
            Ok(v)
        };
        let score_a = parse_score(fields[col_sa])?;
        let score_b = parse_score(fields[col_sb])?;
        let home = match col_home {
            None => None,
            Some(c) => match fields[c] {
                "" => None,
                "a" => Some(HomeSide::A),
                "b" => Some(HomeSide::B),
                "neutral" => Some(HomeSide::Neutral),
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("invalid home value {other:?} (expected a, b or neutral)"),
                    })
                }
            },
        };
        for name in [&entity_a, &entity_b] {
            if !ids.contains_key(name) {
                ids.insert(name.clone(), entities.len());
                entities.push(name.clone());
            }
        }
        max_round = max_round.max(round);
        records.push(MatchRecord {
            round,
            entity_a,
            entity_b,
            score_a,
            score_b,
            home,
        });
    }
    // Stable sort keeps file order within a round.
    records.sort_by_key(|r| r.round);
    Ok(RoundSeries {
        records,
        entities,
        ids,
        max_round,
    })
}

/// Build the comparison digraph over the full entity registry from all
/// matches with round <= `through_round`. Entities with no games yet are
/// isolated vertices.
pub fn build_digraph(series: &RoundSeries, through_round: u32, mode: WeightMode) -> Result<Digraph> {
    if series.is_empty() {
        return Err(Error::EmptySeries);
    }
    if through_round == 0 || through_round > series.max_round {
        return Err(Error::RoundOutOfRange {
            requested: through_round,
            max_round: series.max_round,
        });
    }
    let n = series.entities.len();
    let mut points = Matrix::zeros(n);
    let mut played = Matrix::zeros(n);
    let mut season_games = Matrix::zeros(n);
    for rec in &series.records {
        let i = series.ids[&rec.entity_a];
        let j = series.ids[&rec.entity_b];
        season_games[(i, j)] += 1.0;
        season_games[(j, i)] += 1.0;
        if rec.round > through_round {
            continue;
        }
        match mode {
            WeightMode::Binary => {
                if rec.score_a == rec.score_b {
                    return Err(Error::DrawInBinaryMode {
                        round: rec.round,
                        a: rec.entity_a.clone(),
                        b: rec.entity_b.clone(),
                    });
                }
                if rec.score_a > rec.score_b {
                    points[(i, j)] = 1.0;
                } else {
                    points[(j, i)] = 1.0;
                }
            }
            _ => {
                let s = rec.outcome_for_a();
                points[(i, j)] += s;
                points[(j, i)] += 1.0 - s;
                played[(i, j)] += 1.0;
                played[(j, i)] += 1.0;
            }
        }
    }
    let mut w = Matrix::zeros(n);
    match mode {
        WeightMode::Binary => w = points,
        WeightMode::WinningPercentage => {
            for i in 0..n {
                for j in 0..n {
                    if i != j && season_games[(i, j)] > 0.0 {
                        w[(i, j)] = points[(i, j)] / season_games[(i, j)];
                    }
                }
            }
        }
        WeightMode::WinningPercentageSoFar => {
            for i in 0..n {
                for j in 0..n {
                    if i != j && played[(i, j)] > 0.0 {
                        w[(i, j)] = points[(i, j)] / played[(i, j)];
                    }
                }
            }
        }
    }
    Digraph::from_weights(w)?.with_labels(series.entities.clone())
}

/// Rankability of every prefix of the season: (round, spec_r) for each
/// round 1..=max_round.
pub fn round_by_round_rankability(
    series: &RoundSeries,
    mode: WeightMode,
) -> Result<Vec<(u32, f64)>> {
    round_by_round_reports(series, mode)
        .map(|v| v.into_iter().map(|(m, r)| (m, r.spec_r)).collect())
}

/// Like [`round_by_round_rankability`] but with full reports.
pub fn round_by_round_reports(
    series: &RoundSeries,
    mode: WeightMode,
) -> Result<Vec<(u32, RankabilityReport)>> {
    if series.is_empty() {
        return Err(Error::EmptySeries);
    }
    let mut out = Vec::with_capacity(series.max_round as usize);
    for m in 1..=series.max_round {
        let g = build_digraph(series, m, mode)?;
        out.push((m, spec_r(&g)?));
    }
    Ok(out)
}
