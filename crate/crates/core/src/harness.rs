//! Timing and reach experiments over the registered relations, plus the
//! CSV files they produce.

use std::fmt;
use std::io;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{build_num, build_num_big};
use crate::div3::ImplId;
use crate::expansion::{all_solutions, reach_curve, ExpansionError};
use crate::kanren::{run, solutions, Answer};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid grid `{0}`: expected start:stop:step with step > 0 and start <= stop")]
    InvalidGrid(String),
    #[error("reps must be at least 1")]
    NoReps,
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Inclusive arithmetic range `start, start+step, ..., <= stop`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub start: u64,
    pub stop: u64,
    pub step: u64,
}

impl Grid {
    pub fn new(start: u64, stop: u64, step: u64) -> Result<Self, HarnessError> {
        if step == 0 || start > stop {
            return Err(HarnessError::InvalidGrid(format!("{start}:{stop}:{step}")));
        }
        Ok(Self { start, stop, step })
    }

    pub fn single(n: u64) -> Self {
        Self {
            start: n,
            stop: n,
            step: 1,
        }
    }

    pub fn points(&self) -> impl Iterator<Item = u64> {
        let Grid { start, stop, step } = *self;
        (0..=(stop - start) / step).map(move |k| start + k * step)
    }

    pub fn max(&self) -> u64 {
        self.points().last().unwrap_or(self.start)
    }
}

impl FromStr for Grid {
    type Err = HarnessError;

    /// Accepts `start:stop:step`, `start:stop` (step 1) or a single number.
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let bad = || HarnessError::InvalidGrid(s.to_string());
        let parts: Vec<u64> = s
            .split(':')
            .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match parts[..] {
            [n] => Ok(Grid::single(n)),
            [a, b] => Grid::new(a, b, 1).map_err(|_| bad()),
            [a, b, c] => Grid::new(a, b, c).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

impl Serialize for ImplId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ImplId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpeedSample {
    #[serde(rename = "impl")]
    pub id: ImplId,
    pub n: u64,
    /// Mean wall-clock milliseconds over the timed repetitions.
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachSample {
    #[serde(rename = "impl")]
    pub id: ImplId,
    pub i: u64,
    pub reach: u64,
}

pub const DEFAULT_REPS: u32 = 3;

/// Mean milliseconds taken by `run*` of `id` on the numeral for `n`.
///
/// One untimed warm-up run precedes the `reps` timed ones. Answers are
/// discarded.
pub fn time_of_run_star(id: ImplId, n: u64, reps: u32) -> Result<SpeedSample, HarnessError> {
    if reps == 0 {
        return Err(HarnessError::NoReps);
    }
    let relation = id.relation();
    let once = || solutions(|_| relation(build_num(n))).count();
    std::hint::black_box(once());
    let mut total = 0.0;
    for _ in 0..reps {
        let start = Instant::now();
        std::hint::black_box(once());
        total += start.elapsed().as_secs_f64() * 1e3;
    }
    Ok(SpeedSample {
        id,
        n,
        millis: total / reps as f64,
    })
}

/// One sample per implementation and grid point, measured sequentially.
pub fn speed_sweep(
    impls: &[ImplId],
    grid: &Grid,
    reps: u32,
) -> Result<Vec<SpeedSample>, HarnessError> {
    let mut out = Vec::new();
    for &id in impls {
        for n in grid.points() {
            out.push(time_of_run_star(id, n, reps)?);
        }
    }
    Ok(out)
}

pub fn reach_sweep(impls: &[ImplId], grid: &Grid) -> Result<Vec<ReachSample>, HarnessError> {
    let points: Vec<usize> = grid.points().map(|i| i as usize).collect();
    let mut out = Vec::new();
    for &id in impls {
        let reaches = reach_curve(id, &points)?;
        out.extend(points.iter().zip(reaches).map(|(&i, reach)| ReachSample {
            id,
            i: i as u64,
            reach: reach as u64,
        }));
    }
    Ok(out)
}

/// Whether `id` holds for `n`.
pub fn solve(id: ImplId, n: &BigUint) -> bool {
    !run(1, |_| id.relation()(build_num_big(n))).is_empty()
}

/// The first `count` answers of `id` on a fresh variable.
pub fn enumerate(id: ImplId, count: usize) -> Vec<Answer> {
    run(count, id.relation())
}

/// `answer` followed by the sorted values of the numerals it subsumes,
/// e.g. `(_.0 _.0 1 1) => {12, 15}`.
pub fn describe_family(answer: &Answer) -> Result<String, ExpansionError> {
    let mut values: Vec<BigUint> = all_solutions(answer)?.iter().map(|n| n.value()).collect();
    values.sort();
    let listed: Vec<String> = values.iter().map(ToString::to_string).collect();
    Ok(format!("{answer} => {{{}}}", listed.join(", ")))
}

pub fn write_csv<T: Serialize>(w: impl io::Write, rows: &[T]) -> Result<(), HarnessError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_csv<T: for<'de> Deserialize<'de>>(r: impl io::Read) -> Result<Vec<T>, HarnessError> {
    csv::Reader::from_reader(r)
        .deserialize()
        .map(|row| row.map_err(HarnessError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: Grid = "0:2000:100".parse().unwrap();
        assert_eq!(g.points().count(), 21);
        assert_eq!(g.max(), 2000);
        let g: Grid = "0:10:3".parse().unwrap();
        assert_eq!(g.points().collect::<Vec<_>>(), [0, 3, 6, 9]);
        assert_eq!("7".parse::<Grid>().unwrap(), Grid::single(7));
        assert_eq!("1:3".parse::<Grid>().unwrap().points().count(), 3);
        for bad in ["", "a:b:c", "5:1:1", "0:10:0", "1:2:3:4"] {
            assert!(bad.parse::<Grid>().is_err(), "{bad}");
        }
    }

    #[test]
    fn zero_reps_rejected() {
        assert!(matches!(
            time_of_run_star(ImplId::Dfa, 3, 0),
            Err(HarnessError::NoReps)
        ));
    }

    #[test]
    fn speed_sample_shape() {
        let s = time_of_run_star(ImplId::Dfa, 0, 3).unwrap();
        assert_eq!((s.id, s.n), (ImplId::Dfa, 0));
        assert!(s.millis >= 0.0);
    }

    #[test]
    fn singleton_grid_sweep() {
        let rows = speed_sweep(&ImplId::ALL, &Grid::single(0), 1).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.n == 0 && r.millis < 50.0));
    }

    #[test]
    fn reach_sweep_rows() {
        let rows = reach_sweep(&[ImplId::Dfa], &"0:20:10".parse().unwrap()).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.i, r.reach)).collect();
        assert_eq!(got, [(0, 0), (10, 10), (20, 20)]);
    }

    #[test]
    fn csv_headers() {
        let mut buf = Vec::new();
        let rows = [SpeedSample {
            id: ImplId::XTimesThree,
            n: 100,
            millis: 1.25,
        }];
        write_csv(&mut buf, &rows).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "impl,n,millis\nx*3,100,1.25\n"
        );

        let mut buf = Vec::new();
        let rows = [ReachSample {
            id: ImplId::EvenOdd,
            i: 3,
            reach: 4,
        }];
        write_csv(&mut buf, &rows).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "impl,i,reach\neven-odd,3,4\n"
        );
    }

    #[test]
    fn csv_rejects_unknown_impl() {
        let res: Result<Vec<ReachSample>, _> = read_csv("impl,i,reach\ndiv3,1,1\n".as_bytes());
        assert!(res.is_err());
    }

    #[test]
    fn solve_and_enumerate() {
        assert!(solve(ImplId::Dfa, &BigUint::from(0u8)));
        assert!(!solve(ImplId::XPlusThree, &BigUint::from(7u8)));
        let first = enumerate(ImplId::Dfa, 1);
        assert_eq!(first[0].to_string(), "()");
        let third = &enumerate(ImplId::EvenOdd, 3)[2];
        assert_eq!(describe_family(third).unwrap(), "(_.0 _.0 1 1) => {12, 15}");
    }
}
