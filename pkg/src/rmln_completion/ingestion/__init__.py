"""Image, plan-file and dataset ingestion."""

# Expose the loaders used by the harness and scripts
from .datasets import fetch_dataset, list_images
from .images import LoadedImage, load_image, save_image, save_mask_image
from .plan_file import parse_blocks, parse_plan_file, parse_plan_text
