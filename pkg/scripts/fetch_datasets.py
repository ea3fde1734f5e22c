"""
Fetch a benchmark image set (Set12, BSD68, ...) from a zip archive URL you supply.

The standard inpainting benchmarks are redistributed by several research
groups; pick a mirror you trust and pass its archive URL:

    python scripts/fetch_datasets.py --name set12 --url <archive-url>
    python scripts/fetch_datasets.py --name bsd68 --url <archive-url> --refresh

Images land in data/datasets/<name>/ (RMLN_DATASETS_DIR overrides), which is
what configs/set12_reference.plan points at. Archives are cached for 24h under
data/raw/.
"""
from __future__ import annotations

import click

from rmln_completion.ingestion.datasets import fetch_dataset, list_images
from rmln_completion.logging_config import setup_logging


@click.command()
@click.option("--name", required=True, help="Dataset directory name, e.g. set12")
@click.option("--url", required=True, help="Zip archive URL")
@click.option("--refresh/--no-refresh", default=False, help="Ignore the 24h archive cache")
@click.option("--log-level", default="INFO", help="Logging level")
def main(name: str, url: str, refresh: bool, log_level: str) -> None:
    setup_logging(log_level)
    target = fetch_dataset(url, name, force_refresh=refresh)
    images = list_images(target)
    click.echo(f"✓ {len(images)} image(s) in {target}")
    for path in images:
        click.echo(f"  - {path.name}")


if __name__ == "__main__":
    main()
