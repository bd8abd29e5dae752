"""
Pytest configuration for the verifier tests.

Puts the repository root on the Python path so tests import ``src.*``.
"""

import sys
from pathlib import Path

root_path = Path(__file__).parent
if str(root_path) not in sys.path:
    sys.path.insert(0, str(root_path))
