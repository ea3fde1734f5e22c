"""Benchmark dataset download (user-supplied archive URL) with a 24h cache."""

from __future__ import annotations

import zipfile
from datetime import datetime, timedelta
from pathlib import Path
from urllib.parse import urlparse

import requests

from rmln_completion import constants
from rmln_completion.config import settings
from rmln_completion.logging_config import get_logger

logger = get_logger(__name__)

IMAGE_SUFFIXES = {".png", ".bmp", ".tif", ".tiff", ".jpg", ".jpeg", ".pgm", ".ppm"}


def download_archive(url: str, output_path: Path) -> None:
    """
    Download an archive from URL and save locally.
    """
    logger.info(f"Downloading dataset archive from {url}")
    response = requests.get(url, timeout=settings.download_timeout)
    response.raise_for_status()
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "wb") as f:
        f.write(response.content)
    logger.info(f"Saved archive to {output_path}")


def _is_fresh(path: Path) -> bool:
    mtime = datetime.fromtimestamp(path.stat().st_mtime)
    return datetime.now() - mtime < timedelta(hours=constants.DATASET_CACHE_HOURS)


def fetch_dataset(
    url: str,
    name: str,
    force_refresh: bool = False,
) -> Path:
    """
    Download and unpack a benchmark image set (e.g. Set12, BSD68) from a zip archive.

    The archive is cached under ``settings.raw_data_dir`` and reused for 24h
    unless ``force_refresh``; images are extracted to
    ``settings.datasets_dir/<name>``.

    Args:
        url: archive location supplied by the user
        name: dataset directory name
        force_refresh: If True, download even if the cached archive is fresh

    Returns:
        Directory holding the extracted images
    """
    suffix = Path(urlparse(url).path).suffix or ".zip"
    archive = Path(settings.raw_data_dir) / f"{name}{suffix}"

    if archive.exists() and not force_refresh and _is_fresh(archive):
        logger.info(f"Using cached archive {archive}")
    else:
        if archive.exists():
            logger.info("Cached archive is older than 24h or refresh forced, downloading new file")
        download_archive(url, archive)

    if not zipfile.is_zipfile(archive):
        raise ValueError(f"{archive} is not a zip archive; unpack it manually")

    target = Path(settings.datasets_dir) / name
    target.mkdir(parents=True, exist_ok=True)
    extracted = 0
    with zipfile.ZipFile(archive) as zf:
        for member in zf.infolist():
            member_path = Path(member.filename)
            if member.is_dir() or member_path.suffix.lower() not in IMAGE_SUFFIXES:
                continue
            # flatten; archive folders are not kept
            (target / member_path.name).write_bytes(zf.read(member))
            extracted += 1

    logger.info(f"Extracted {extracted} image(s) to {target}")
    return target


def list_images(directory: str | Path) -> list[Path]:
    """Image files of a directory, sorted by name."""
    directory = Path(directory)
    return sorted(p for p in directory.iterdir() if p.suffix.lower() in IMAGE_SUFFIXES)
