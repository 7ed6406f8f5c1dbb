import sys

from ncseries.main import main

sys.exit(main())
