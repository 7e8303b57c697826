//! Text checkpoint and zero-list formats.
//!
//! ```text
//! sppk-checkpoint v1
//! kind=r3zero
//! range=2..120
//! block=1048576
//! next=64
//! zeros:
//! 2
//! 3
//! ```

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::ScanState;
use crate::error::{Error, Result};

const MAGIC: &str = "sppk-checkpoint";
const VERSION: &str = "v1";

/// Receives the scan state after every completed block.
pub trait CheckpointSink {
    fn record(&mut self, state: &ScanState) -> Result<()>;
}

/// Discards checkpoints.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoCheckpoint;

impl CheckpointSink for NoCheckpoint {
    fn record(&mut self, _state: &ScanState) -> Result<()> {
        Ok(())
    }
}

/// Keeps every recorded state in memory.
#[derive(Debug, Default, Clone)]
pub struct MemoryCheckpoints {
    pub states: Vec<ScanState>,
}

impl CheckpointSink for MemoryCheckpoints {
    fn record(&mut self, state: &ScanState) -> Result<()> {
        self.states.push(state.clone());
        Ok(())
    }
}

/// Rewrites a checkpoint file after each block. The file is replaced
/// atomically via a sibling temporary file.
#[derive(Debug, Clone)]
pub struct FileCheckpoint {
    path: PathBuf,
}

impl FileCheckpoint {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        FileCheckpoint { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }
}

impl CheckpointSink for FileCheckpoint {
    fn record(&mut self, state: &ScanState) -> Result<()> {
        let mut tmp = self.path.clone().into_os_string();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(encode_checkpoint(state).as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, &self.path)
        };
        write().map_err(Error::CheckpointWrite)
    }
}

pub fn encode_checkpoint(state: &ScanState) -> String {
    let mut out = format!(
        "{MAGIC} {VERSION}\nkind={}\nrange={}..{}\nblock={}\nnext={}\nzeros:\n",
        state.kind, state.lo, state.hi, state.block_size, state.next
    );
    for z in &state.zeros {
        out.push_str(&z.to_string());
        out.push('\n');
    }
    out
}

fn field<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    line.and_then(|l| l.strip_prefix(key))
        .and_then(|l| l.strip_prefix('='))
        .ok_or_else(|| Error::Format(format!("expected `{key}=...` line")))
}

fn number(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Format(format!("{what}: not a decimal integer: {s:?}")))
}

pub fn decode_checkpoint(text: &str) -> Result<ScanState> {
    let mut lines = text.lines();
    match lines.next().and_then(|l| l.split_once(' ')) {
        Some((MAGIC, VERSION)) => {}
        Some((MAGIC, v)) => return Err(Error::Format(format!("unsupported checkpoint version {v}"))),
        _ => return Err(Error::Format("missing checkpoint header".into())),
    }
    let kind = field(lines.next(), "kind")?.parse()?;
    let (lo, hi) = field(lines.next(), "range")?
        .split_once("..")
        .ok_or_else(|| Error::Format("range must be `<lo>..<hi>`".into()))?;
    let (lo, hi) = (number(lo, "range")?, number(hi, "range")?);
    let block_size = number(field(lines.next(), "block")?, "block")?;
    let next = number(field(lines.next(), "next")?, "next")?;
    if lines.next() != Some("zeros:") {
        return Err(Error::Format("expected `zeros:` line".into()));
    }
    let zeros = lines
        .filter(|l| !l.is_empty())
        .map(|l| number(l, "zero"))
        .collect::<Result<Vec<_>>>()?;

    let state = ScanState {
        kind,
        lo,
        hi,
        next,
        zeros,
        block_size,
    };
    state.validate()?;
    Ok(state)
}

pub fn read_checkpoint(path: impl AsRef<Path>) -> Result<ScanState> {
    decode_checkpoint(&fs::read_to_string(path)?)
}

/// One decimal integer per line, newline-terminated, no header.
pub fn format_zero_list(zeros: &[u64]) -> String {
    zeros.iter().map(|z| format!("{z}\n")).collect()
}

pub fn write_zero_list(path: impl AsRef<Path>, zeros: &[u64]) -> Result<()> {
    Ok(fs::write(path, format_zero_list(zeros))?)
}

pub fn parse_zero_list(text: &str) -> Result<Vec<u64>> {
    let zeros = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| number(l, "zero list"))
        .collect::<Result<Vec<_>>>()?;
    if zeros.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Format("zero list is not strictly ascending".into()));
    }
    Ok(zeros)
}

pub fn read_zero_list(path: impl AsRef<Path>) -> Result<Vec<u64>> {
    parse_zero_list(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::ScanKind;

    fn sample() -> ScanState {
        ScanState {
            kind: ScanKind::R3Zero,
            lo: 2,
            hi: 120,
            next: 64,
            zeros: vec![2, 3, 5, 7],
            block_size: 31,
        }
    }

    #[test]
    fn layout() {
        assert_eq!(
            encode_checkpoint(&sample()),
            "sppk-checkpoint v1\nkind=r3zero\nrange=2..120\nblock=31\nnext=64\nzeros:\n2\n3\n5\n7\n"
        );
    }

    #[test]
    fn decode_round_trip() {
        let s = sample();
        assert_eq!(decode_checkpoint(&encode_checkpoint(&s)).unwrap(), s);
    }

    #[test]
    fn rejects_bad_files() {
        let good = encode_checkpoint(&sample());
        for bad in [
            good.replace("v1", "v2"),
            good.replace("sppk-checkpoint", "other"),
            good.replace("kind=r3zero", "kind=r5zero"),
            good.replace("next=64", "next=122"),
            good.replace("next=64", "next=1"),
            good.replace("range=2..120", "range=2-120"),
            good.replace("\n5\n", "\nfive\n"),
            good.replace("\n5\n7\n", "\n7\n5\n"),
            good.replace("zeros:", "zeroes:"),
            String::new(),
        ] {
            assert!(matches!(decode_checkpoint(&bad), Err(Error::Format(_))), "{bad:?}");
        }
    }

    #[test]
    fn zero_list_format() {
        assert_eq!(format_zero_list(&[2, 3, 5]), "2\n3\n5\n");
        assert_eq!(parse_zero_list("2\n3\n5\n").unwrap(), vec![2, 3, 5]);
        assert!(parse_zero_list("3\n2\n").is_err());
    }

    #[test]
    fn file_sink_writes_atomically() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.ckpt");
        let mut sink = FileCheckpoint::new(&path);
        sink.record(&sample()).unwrap();
        assert_eq!(read_checkpoint(&path).unwrap(), sample());
        assert!(!dir.path().join("scan.ckpt.tmp").exists());
    }

    #[test]
    fn file_sink_failure_is_distinct() {
        let dir = tempfile::tempdir().unwrap();
        let mut sink = FileCheckpoint::new(dir.path().join("missing").join("scan.ckpt"));
        assert!(matches!(sink.record(&sample()), Err(Error::CheckpointWrite(_))));
    }
}
