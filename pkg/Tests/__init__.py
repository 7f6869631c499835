""" Notes on PgBufferSim Tests
- all suites are plain unittest.TestCase classes and run offline
- workload sizes and seeds of the acceptance suite live in the [acceptance] section of config.ini
- run with `python -m pytest` from the repository root, or `python -m unittest discover -s Tests -p "*.py"`

"""
