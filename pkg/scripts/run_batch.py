#!/usr/bin/env python3

import argparse
import json
import logging
import sys
from datetime import datetime
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from leibniz import settings  # noqa: E402
from leibniz.derivations import is_complete  # noqa: E402
from leibniz.exceptions import LeibnizError  # noqa: E402
from leibniz.families import build_R_A, build_R_N, build_table2, table2_examples  # noqa: E402
from leibniz.pipelines import CertificatePipeline  # noqa: E402
from leibniz.splitting import solve_cross_action  # noqa: E402


def setup_logger():
    """Set up logging."""
    timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
    log_file = settings.LOG_FILE or f'batch_{timestamp}.log'

    logging.basicConfig(
        level=logging.INFO,
        format=settings.LOG_FORMAT,
        handlers=[
            logging.FileHandler(log_file),
            logging.StreamHandler()
        ]
    )
    return logging.getLogger(__name__)


def parse_arguments():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description='Certify the splitting of every listed R + sl2.')

    parser.add_argument('--instances', nargs='+', help='Instance names to run (default: all)')
    parser.add_argument('--config', default=settings.BATCH_CONFIG, help='Path to the instance configuration file')
    parser.add_argument('--output-dir', default=settings.OUTPUT_DIR, help='Directory for certificates')
    parser.add_argument('--allow-incomplete', action='store_true', help='Waive the completeness precondition')

    return parser.parse_args()


def load_instances(config_file):
    """Load instance definitions from the configuration file."""
    try:
        with open(config_file, 'r') as f:
            return json.load(f)
    except (IOError, json.JSONDecodeError) as e:
        logging.error(f"Failed to load instances from {config_file}: {e}")
        return {}


def build_instance(entry):
    """Radical and nilradical for one configuration entry."""
    kind = entry['kind']
    if kind == 'abelian-ext':
        return build_R_A(entry['k'], entry['alpha'])
    if kind == 'nfs':
        return build_R_N(entry['shape'])
    if kind == 'table2':
        return build_table2(table2_examples()[entry['example']])
    raise LeibnizError(f"unknown instance kind {kind!r}")


def main():
    """Main function to run the batch."""
    logger = setup_logger()
    args = parse_arguments()

    instances = load_instances(args.config)
    names = args.instances or list(instances)
    if not names:
        logger.error("No instances specified. Exiting.")
        return

    pipeline = CertificatePipeline(args.output_dir)
    pipeline.open()
    logger.info(f"Starting certification of {len(names)} instances...")

    for name in names:
        if name not in instances:
            logger.error(f"Unknown instance {name!r}")
            continue
        logger.info(f"Certifying {name}")
        try:
            R, N = build_instance(instances[name])
            certificate = solve_cross_action(R, N, require_complete=not args.allow_incomplete).to_dict()
            certificate['complete'] = is_complete(R).complete
            certificate['dim'] = R.dim
            pipeline.process_item(name, certificate)
        except LeibnizError as e:
            logger.error(f"Error certifying {name}: {e}")
        except (KeyError, TypeError) as e:
            logger.error(f"Malformed configuration for {name}: {e}")

    pipeline.close()
    logger.info("Batch complete!")


if __name__ == "__main__":
    main()
