//! Worker-pool sizing from `LCST_THREADS`.

use crate::error::{Error, Result};

pub const THREADS_ENV: &str = "LCST_THREADS";

/// Parses a thread-count setting; `None` or empty means "use the default pool".
pub fn parse_threads(value: Option<&str>) -> Result<Option<usize>> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => match v.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::BadParams(format!("{THREADS_ENV} must be a positive integer, got '{v}'"))),
        },
    }
}

/// Runs `f` inside a pool sized by `LCST_THREADS`, or the global pool when unset.
pub fn with_env_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let setting = std::env::var(THREADS_ENV).ok();
    match parse_threads(setting.as_deref())? {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::BadParams(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}
