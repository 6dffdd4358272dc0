import sys

from hypershape.cli import main

sys.exit(main())
