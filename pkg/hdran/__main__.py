import sys

from hdran.main import main

sys.exit(main())
