from pythforms.main import main

main()
