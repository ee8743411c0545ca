import sys

from sl3coh import main


sys.exit(main())
