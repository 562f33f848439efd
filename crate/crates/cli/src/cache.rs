//! File-backed cache of eigenform coefficients `a_n`.
//!
//! The file is text: a header line
//! `cubesum-cache v1 convention=<name> max=<N>` followed by `n a_n` lines.
//! Writers hold an exclusive lock on a sibling `.lock` file and replace the
//! cache by rename; readers take a shared lock and tolerate a missing file.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;

use cubesum_core::modular::hecke_expand;
use cubesum_core::Convention;

pub const VERSION: &str = "v1";
pub const CONVENTION: Convention = Convention::ModularCoefficient;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CacheContents {
    pub version: String,
    pub convention: String,
    pub max: usize,
    /// `coefficients[n]` is `a_n`; index 0 holds `a_0 = 0`.
    pub coefficients: Vec<BigInt>,
}

pub struct CoefficientCache {
    path: PathBuf,
}

/// `$CUBESUM_CACHE`, else under `$XDG_CACHE_HOME` or `~/.cache`, else the
/// system temporary directory.
pub fn default_path() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("cubesum").join("coefficients.txt")
}

fn header(max: usize) -> String {
    format!("cubesum-cache {VERSION} convention={CONVENTION} max={max}")
}

fn parse_header(line: &str) -> Option<(String, String, usize)> {
    let mut parts = line.split_whitespace();
    if parts.next()? != "cubesum-cache" {
        return None;
    }
    let version = parts.next()?.to_string();
    let convention = parts.next()?.strip_prefix("convention=")?.to_string();
    let max = parts.next()?.strip_prefix("max=")?.parse().ok()?;
    Some((version, convention, max))
}

impl CoefficientCache {
    pub fn at(path: impl Into<PathBuf>) -> Self {
        CoefficientCache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn lock_path(&self) -> PathBuf {
        let mut name = self.path.file_name().unwrap_or_default().to_os_string();
        name.push(".lock");
        self.path.with_file_name(name)
    }

    fn lock_file(&self) -> Result<File> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(self.lock_path())
            .with_context(|| format!("opening {}", self.lock_path().display()))
    }

    /// The stored contents, `None` if absent. A malformed file is an error.
    pub fn load(&self) -> Result<Option<CacheContents>> {
        if !self.path.exists() {
            return Ok(None);
        }
        let lock = self.lock_file()?;
        lock.lock_shared()?;
        let result = self.read_unlocked();
        lock.unlock()?;
        result
    }

    fn read_unlocked(&self) -> Result<Option<CacheContents>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut lines = BufReader::new(file).lines();
        let first = lines.next().transpose()?.unwrap_or_default();
        let Some((version, convention, max)) = parse_header(&first) else {
            bail!("{}: bad cache header {first:?}", self.path.display());
        };
        let mut coefficients = vec![BigInt::default(); max + 1];
        let mut seen = 0;
        for line in lines {
            let line = line?;
            let Some((n, a)) = line.split_once(' ') else {
                bail!("{}: bad line {line:?}", self.path.display());
            };
            let n: usize = n.parse().with_context(|| format!("bad index in {line:?}"))?;
            if n == 0 || n > max {
                bail!("{}: index {n} outside 1..={max}", self.path.display());
            }
            coefficients[n] = a.parse().with_context(|| format!("bad coefficient in {line:?}"))?;
            seen += 1;
        }
        if seen != max {
            bail!("{}: expected {max} coefficients, found {seen}", self.path.display());
        }
        Ok(Some(CacheContents { version, convention, max, coefficients }))
    }

    /// Regenerates the cache through `a_max`.
    pub fn build(&self, max: usize) -> Result<CacheContents> {
        let series = hecke_expand(max);
        let contents = CacheContents {
            version: VERSION.into(),
            convention: CONVENTION.to_string(),
            max,
            coefficients: series.coefficients,
        };
        let lock = self.lock_file()?;
        lock.lock()?;
        let result = self.write_unlocked(&contents);
        lock.unlock()?;
        result.map(|_| contents)
    }

    fn write_unlocked(&self, contents: &CacheContents) -> Result<()> {
        let tmp = self.path.with_extension("tmp");
        {
            let mut f = std::io::BufWriter::new(File::create(&tmp)?);
            writeln!(f, "{}", header(contents.max))?;
            for (n, a) in contents.coefficients.iter().enumerate().skip(1) {
                writeln!(f, "{n} {a}")?;
            }
            f.flush()?;
        }
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }

    /// Coefficients through at least `a_n`, loading the cache when it is
    /// current and large enough and rebuilding it otherwise.
    pub fn get(&self, n: usize) -> Result<Vec<BigInt>> {
        let current = match self.load() {
            Ok(c) => c,
            Err(_) => None,
        };
        let contents = match current {
            Some(c) if c.version == VERSION && c.convention == CONVENTION.to_string() && c.max >= n => c,
            Some(c) => self.build(n.max(c.max))?,
            None => self.build(n)?,
        };
        Ok(contents.coefficients)
    }

    pub fn clear(&self) -> Result<bool> {
        let lock = self.lock_file()?;
        lock.lock()?;
        let existed = match fs::remove_file(&self.path) {
            Ok(()) => true,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => false,
            Err(e) => return Err(e.into()),
        };
        lock.unlock()?;
        drop(lock);
        let _ = fs::remove_file(self.lock_path());
        Ok(existed)
    }
}
