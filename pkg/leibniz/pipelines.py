import hashlib
import json
import logging
import os
import sys
from datetime import datetime
from pathlib import Path

from colorama import Fore, Style

from leibniz import __version__, settings
from leibniz.serialization import dump_json

logger = logging.getLogger(__name__)

POSITIVE = ('ok', 'complete', 'splits', 'passed', 'holds')


def input_digest(data):
    """SHA-256 of the raw input bytes, recorded for provenance."""
    if isinstance(data, str):
        data = data.encode('utf-8')
    return hashlib.sha256(data).hexdigest()


class ReportPipeline:
    """Pipeline to write one JSON report, stamped with the tool version."""

    def __init__(self, output=None, digests=None, indent=None):
        self.output = output  # path, or None for stdout
        self.digests = dict(digests or {})
        self.indent = indent  # None keeps the canonical compact form

    def process_item(self, report):
        stamped = dict(report)
        stamped['version'] = __version__
        if self.digests:
            if len(self.digests) == 1:
                stamped['input_sha256'] = next(iter(self.digests.values()))
            else:
                stamped['input_sha256'] = dict(sorted(self.digests.items()))
        if self.indent is None:
            text = dump_json(stamped)
        else:
            text = json.dumps(stamped, indent=self.indent, ensure_ascii=False)
        if self.output:
            Path(self.output).parent.mkdir(parents=True, exist_ok=True)
            with open(self.output, 'w', encoding='utf-8') as f:
                f.write(text + '\n')
            logger.info(f"Report written to {self.output}")
        else:
            sys.stdout.write(text + '\n')
        return stamped


class SummaryPipeline:
    """Pipeline to print a coloured one-line verdict on stderr."""

    def __init__(self, stream=None):
        self.stream = stream or sys.stderr

    def process_item(self, verb, report):
        verdict = str(report.get('verdict', 'done'))
        colour = Fore.GREEN if verdict in POSITIVE else Fore.RED
        details = ', '.join(f"{key}={value}" for key, value in report.items()
                            if isinstance(value, (int, str)) and key != 'verdict')
        line = f"{Style.BRIGHT}{verb}{Style.RESET_ALL}: {colour}{verdict}{Style.RESET_ALL}"
        if details:
            line += f" ({details})"
        self.stream.write(line + '\n')
        return report


class CertificatePipeline:
    """Pipeline to save batch certificates, one file per instance plus a combined file."""

    def __init__(self, output_dir=None):
        self.output_dir = output_dir or settings.OUTPUT_DIR
        self.items = {}

    def open(self):
        Path(self.output_dir).mkdir(parents=True, exist_ok=True)

    def process_item(self, name, certificate):
        if name in self.items:
            logger.warning(f"Duplicate instance name {name!r}; keeping the first certificate")
            return self.items[name]
        self.items[name] = certificate
        return certificate

    def close(self):
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        for name, certificate in self.items.items():
            filepath = os.path.join(self.output_dir, f"{name}.json")
            with open(filepath, 'w', encoding='utf-8') as f:
                json.dump(certificate, f, indent=2)

        combined_file = os.path.join(self.output_dir, f"all_instances_{timestamp}.json")
        with open(combined_file, 'w', encoding='utf-8') as f:
            json.dump(self.items, f, indent=2)

        splits = sum(1 for c in self.items.values() if c.get('verdict') == 'splits')
        logger.info(f"Certified {splits} of {len(self.items)} instances")
        for name, certificate in self.items.items():
            logger.info(f"  - {name}: {certificate.get('verdict')}")
        return combined_file
