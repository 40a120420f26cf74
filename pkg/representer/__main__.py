from representer.main import main

raise SystemExit(main())
