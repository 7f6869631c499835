import sys

from PgBufferSim.Cli import main

sys.exit(main())
