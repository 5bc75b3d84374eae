"""
SolvGraph command line

Solvabilizers, solvable graphs and verification suites for Lie
superalgebras over GF(p).

Usage:
    python solvgraph.py sol data/algebras/E2.json
    python solvgraph.py graph E2@3 --kind solvable --measure --dot results/E2.dot
    python solvgraph.py verify all --seed 1

Configuration:
    SOLVGRAPH_WORKERS and SOLVGRAPH_CLOSURE may be set in a .env file
"""

import sys
import logging
from pathlib import Path
from dotenv import load_dotenv

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import main

# Load environment variables
load_dotenv()

# Log to stderr so stdout carries only results
logging.basicConfig(
    level=logging.INFO,
    format='%(message)s',
    handlers=[logging.StreamHandler(sys.stderr)]
)

if __name__ == "__main__":
    sys.exit(main())
