//! Binary spike trains over discrete time steps.
//!
//! A [`SpikeTrainGrid`] holds at most one spike per site per step, for a
//! population laid out as a `(rows, cols)` grid. A 1-D afferent population
//! is the `cols = 1` case. Step = one simulated millisecond by convention.
//!
//! Two on-disk layouts are supported:
//!
//! **Packed binary** — header `b"SPK1"`, then `rows`, `cols`, `steps` as
//! little-endian `u32`, then `ceil(rows*cols*steps / 8)` bytes of events in
//! step-major order (step, then row, then col), LSB-first within each byte.
//! Padding bits in the final byte must be zero.
//!
//! **Event CSV** — header `row,col,step`, one record per spike, emitted in
//! step-major order. The grid dimensions are not stored in the CSV; readers
//! supply them.

use std::io::{Read, Write};

use crate::error::{Error, Result};

const PACKED_MAGIC: &[u8; 4] = b"SPK1";

/// Binary spike events for a `(rows, cols)` population over `steps` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpikeTrainGrid {
    rows: usize,
    cols: usize,
    steps: usize,
    /// Step-major occupancy: index = `step * rows * cols + row * cols + col`.
    events: Vec<bool>,
}

impl SpikeTrainGrid {
    /// Create an all-zero spike train. Dimensions and steps must be ≥ 1.
    pub fn new(rows: usize, cols: usize, steps: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid_argument(format!(
                "shape dimensions must be >= 1, got {rows}x{cols}"
            )));
        }
        if steps == 0 {
            return Err(Error::invalid_argument("steps must be >= 1"));
        }
        Ok(Self {
            rows,
            cols,
            steps,
            events: vec![false; rows * cols * steps],
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of sites per step (`rows * cols`).
    pub fn sites(&self) -> usize {
        self.rows * self.cols
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    fn index(&self, row: usize, col: usize, step: usize) -> Result<usize> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::bounds(format!(
                "site ({row}, {col}) outside {}x{} grid",
                self.rows, self.cols
            )));
        }
        if step >= self.steps {
            return Err(Error::bounds(format!(
                "step {step} outside 0..{}",
                self.steps
            )));
        }
        Ok(step * self.sites() + row * self.cols + col)
    }

    pub fn get(&self, row: usize, col: usize, step: usize) -> Result<bool> {
        Ok(self.events[self.index(row, col, step)?])
    }

    pub fn set(&mut self, row: usize, col: usize, step: usize, spike: bool) -> Result<()> {
        let i = self.index(row, col, step)?;
        self.events[i] = spike;
        Ok(())
    }

    /// All sites at one step, row-major.
    pub fn frame(&self, step: usize) -> Result<&[bool]> {
        if step >= self.steps {
            return Err(Error::bounds(format!(
                "step {step} outside 0..{}",
                self.steps
            )));
        }
        let sites = self.sites();
        Ok(&self.events[step * sites..(step + 1) * sites])
    }

    pub(crate) fn frame_mut(&mut self, step: usize) -> Result<&mut [bool]> {
        if step >= self.steps {
            return Err(Error::bounds(format!(
                "step {step} outside 0..{}",
                self.steps
            )));
        }
        let sites = self.sites();
        Ok(&mut self.events[step * sites..(step + 1) * sites])
    }

    /// Total number of spikes across all sites and steps.
    pub fn spike_count(&self) -> u64 {
        self.events.iter().filter(|&&e| e).count() as u64
    }

    /// Spikes as `(row, col, step)` tuples in step-major order.
    pub fn iter_events(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let sites = self.sites();
        let cols = self.cols;
        self.events
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(move |(i, _)| {
                let step = i / sites;
                let site = i % sites;
                (site / cols, site % cols, step)
            })
    }

    /// Write the packed binary layout described in the module docs.
    pub fn write_packed<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(PACKED_MAGIC)?;
        for dim in [self.rows, self.cols, self.steps] {
            let dim = u32::try_from(dim)
                .map_err(|_| Error::invalid_argument("dimension exceeds u32 in packed layout"))?;
            out.write_all(&dim.to_le_bytes())?;
        }
        let mut byte = 0u8;
        for (i, &e) in self.events.iter().enumerate() {
            if e {
                byte |= 1 << (i % 8);
            }
            if i % 8 == 7 {
                out.write_all(&[byte])?;
                byte = 0;
            }
        }
        if self.events.len() % 8 != 0 {
            out.write_all(&[byte])?;
        }
        Ok(())
    }

    /// Read the packed binary layout. Rejects bad magic, short bodies, and
    /// nonzero padding bits.
    pub fn read_packed<R: Read>(mut input: R) -> Result<Self> {
        let mut header = [0u8; 16];
        input
            .read_exact(&mut header)
            .map_err(|_| Error::parse(0, "truncated packed spike-train header"))?;
        if &header[0..4] != PACKED_MAGIC {
            return Err(Error::parse(0, "bad magic, expected SPK1"));
        }
        let dim = |i: usize| u32::from_le_bytes(header[i..i + 4].try_into().unwrap()) as usize;
        let (rows, cols, steps) = (dim(4), dim(8), dim(12));
        let mut grid = Self::new(rows, cols, steps)
            .map_err(|e| Error::parse(0, format!("invalid packed dimensions: {e}")))?;
        let n_bits = rows * cols * steps;
        let mut body = vec![0u8; n_bits.div_ceil(8)];
        input
            .read_exact(&mut body)
            .map_err(|_| Error::parse(0, "truncated packed spike-train body"))?;
        for (i, slot) in grid.events.iter_mut().enumerate() {
            *slot = body[i / 8] & (1 << (i % 8)) != 0;
        }
        let used_in_last = n_bits % 8;
        if used_in_last != 0 && body[n_bits / 8] >> used_in_last != 0 {
            return Err(Error::parse(0, "nonzero padding bits in packed body"));
        }
        Ok(grid)
    }

    /// Write the sparse `row,col,step` event CSV.
    pub fn write_event_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["row", "col", "step"])
            .map_err(csv_io_error)?;
        for (row, col, step) in self.iter_events() {
            w.write_record([row.to_string(), col.to_string(), step.to_string()])
                .map_err(csv_io_error)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Read a sparse event CSV into a grid of the given dimensions.
    /// Out-of-range events and malformed records are rejected with their
    /// line number.
    pub fn read_event_csv<R: Read>(input: R, rows: usize, cols: usize, steps: usize) -> Result<Self> {
        let mut grid = Self::new(rows, cols, steps)?;
        let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
        for record in reader.records() {
            let record = record.map_err(|e| {
                let line = e.position().map_or(0, |p| p.line() as usize);
                Error::parse(line, format!("malformed event record: {e}"))
            })?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            if record.len() != 3 {
                return Err(Error::parse(line, "expected 3 fields: row,col,step"));
            }
            let field = |i: usize, name: &str| -> Result<usize> {
                record[i]
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("bad {name} value {:?}", &record[i])))
            };
            let (row, col, step) = (field(0, "row")?, field(1, "col")?, field(2, "step")?);
            grid.set(row, col, step, true)
                .map_err(|e| Error::parse(line, e.to_string()))?;
        }
        Ok(grid)
    }
}

fn csv_io_error(e: csv::Error) -> Error {
    Error::parse(0, e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_shapes() {
        assert!(SpikeTrainGrid::new(0, 1, 1).is_err());
        assert!(SpikeTrainGrid::new(1, 0, 1).is_err());
        assert!(SpikeTrainGrid::new(1, 1, 0).is_err());
    }

    #[test]
    fn set_get_round_trip() {
        let mut g = SpikeTrainGrid::new(3, 2, 4).unwrap();
        g.set(2, 1, 3, true).unwrap();
        assert!(g.get(2, 1, 3).unwrap());
        assert!(!g.get(0, 0, 0).unwrap());
        assert_eq!(g.spike_count(), 1);
        assert!(g.set(3, 0, 0, true).is_err());
        assert!(g.get(0, 0, 4).is_err());
    }

    #[test]
    fn frame_is_row_major_slice() {
        let mut g = SpikeTrainGrid::new(2, 3, 2).unwrap();
        g.set(1, 2, 1, true).unwrap();
        assert_eq!(g.frame(0).unwrap(), &[false; 6]);
        let f1 = g.frame(1).unwrap();
        assert!(f1[1 * 3 + 2]);
        assert_eq!(f1.iter().filter(|&&e| e).count(), 1);
    }

    #[test]
    fn packed_round_trip() {
        let mut g = SpikeTrainGrid::new(5, 7, 9).unwrap();
        for (r, c, t) in [(0, 0, 0), (4, 6, 8), (2, 3, 5), (1, 1, 1)] {
            g.set(r, c, t, true).unwrap();
        }
        let mut buf = Vec::new();
        g.write_packed(&mut buf).unwrap();
        assert_eq!(&buf[0..4], b"SPK1");
        let back = SpikeTrainGrid::read_packed(buf.as_slice()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn packed_rejects_corruption() {
        let g = SpikeTrainGrid::new(2, 2, 2).unwrap();
        let mut buf = Vec::new();
        g.write_packed(&mut buf).unwrap();

        let mut bad_magic = buf.clone();
        bad_magic[0] = b'X';
        assert!(SpikeTrainGrid::read_packed(bad_magic.as_slice()).is_err());

        let truncated = &buf[..buf.len() - 1];
        assert!(SpikeTrainGrid::read_packed(truncated).is_err());

        // 8 events used in the single body byte, so grow to force padding:
        let mut g2 = SpikeTrainGrid::new(1, 3, 1).unwrap();
        g2.set(0, 0, 0, true).unwrap();
        let mut buf2 = Vec::new();
        g2.write_packed(&mut buf2).unwrap();
        let last = buf2.len() - 1;
        buf2[last] |= 1 << 7; // padding bit
        assert!(SpikeTrainGrid::read_packed(buf2.as_slice()).is_err());
    }

    #[test]
    fn event_csv_round_trip() {
        let mut g = SpikeTrainGrid::new(4, 4, 3).unwrap();
        for (r, c, t) in [(0, 3, 0), (3, 0, 2), (1, 1, 1)] {
            g.set(r, c, t, true).unwrap();
        }
        let mut buf = Vec::new();
        g.write_event_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("row,col,step\n"));
        let back = SpikeTrainGrid::read_event_csv(buf.as_slice(), 4, 4, 3).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn event_csv_reports_bad_rows_with_line() {
        let text = "row,col,step\n0,0,0\n9,9,9\n";
        let err = SpikeTrainGrid::read_event_csv(text.as_bytes(), 2, 2, 2).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
