import os
import sys

# the installed entry point imports lib/ as a top-level package
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
