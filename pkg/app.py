import sys

from sl3coh import app_factory, config, run

app = app_factory(config.AppConfig())

if __name__ == "__main__":
    sys.exit(run(app))
