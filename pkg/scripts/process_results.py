#!/usr/bin/env python3

import argparse
import csv
import json
from pathlib import Path

from colorama import Fore, Style


def parse_arguments():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description='Merge and summarise splitting certificates.')

    parser.add_argument('--input-dir', default='output', help='Directory with certificate files')
    parser.add_argument('--output-file', default='certificates.json', help='Output file')
    parser.add_argument('--format', choices=['json', 'csv', 'txt'], default='json', help='Output format')

    return parser.parse_args()


def merge_results(input_dir):
    """Merge all individual certificate files, keyed by instance name."""
    results = {}

    json_files = sorted(Path(input_dir).glob('*.json'))
    if not json_files:
        print(f"No JSON files found in {input_dir}")
        return results

    for file_path in json_files:
        # Skip the combined results files
        if file_path.name.startswith('all_instances_'):
            continue
        try:
            with open(file_path, 'r') as f:
                data = json.load(f)
        except json.JSONDecodeError:
            print(f"Error parsing JSON from {file_path}")
            continue
        if isinstance(data, dict) and 'stages' in data:
            results[file_path.stem] = data

    return results


def stage_rows(results):
    for name, certificate in results.items():
        for stage in certificate['stages']:
            yield name, certificate['verdict'], stage


def export_results(results, output_file, format_type):
    """Export results in the specified format."""
    if format_type == 'json':
        with open(output_file, 'w') as f:
            json.dump(results, f, indent=2)

    elif format_type == 'csv':
        with open(output_file, 'w', newline='') as f:
            writer = csv.writer(f)
            writer.writerow(['Instance', 'Verdict', 'Stage', 'Layer', 'Unknowns', 'Rows', 'Kernel', 'Deferred'])
            for name, verdict, stage in stage_rows(results):
                writer.writerow([name, verdict, stage['m'], stage['layer_dim'], stage['unknowns'],
                                 stage['rows'], stage['kernel_dim'], stage['deferred']])

    elif format_type == 'txt':
        with open(output_file, 'w') as f:
            for name, certificate in results.items():
                f.write(f"Instance: {name} ({certificate['verdict']})\n")
                f.write("=" * 50 + "\n")
                for stage in certificate['stages']:
                    f.write(f"m={stage['m']}: layer {stage['layer_dim']}, {stage['unknowns']} unknowns, "
                            f"{stage['rows']} rows, kernel {stage['kernel_dim']}\n")
                f.write("\n\n")

    print(f"Results exported to {output_file} in {format_type} format")


def print_statistics(results):
    """Print statistics about the results."""
    splits = sum(1 for c in results.values() if c['verdict'] == 'splits')

    print("\n" + "=" * 50)
    print(f"Total instances: {len(results)}")
    print(f"Certified splits: {splits}")
    print("=" * 50)

    for name, certificate in results.items():
        colour = Fore.GREEN if certificate['verdict'] == 'splits' else Fore.RED
        unknowns = sum(stage['unknowns'] for stage in certificate['stages'])
        print(f"{name}: {colour}{certificate['verdict']}{Style.RESET_ALL} "
              f"({len(certificate['stages'])} stages, {unknowns} unknowns)")

    print("=" * 50)


def main():
    """Main function to process results."""
    args = parse_arguments()

    results = merge_results(args.input_dir)

    if not results:
        print("No results found to process.")
        return

    print_statistics(results)

    export_results(results, args.output_file, args.format)


if __name__ == "__main__":
    main()
