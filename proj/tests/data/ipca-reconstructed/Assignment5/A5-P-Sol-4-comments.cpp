/*
 * Assignment 5
 * Written for the introductory programming course
 */
/* header files */
#include <iostream>
/* standard namespace */
using namespace std;

void addNumbers(int x, int y, int &result)
{
	result = x + y;
}

/* program starts here */
int main()
{
	int times, p, q, answer;
	cout << "How many additions? ";
	/* read input from user */
	cin >> times;
	/* loop */
	for (int k = 1; k <= times; k++)
	{
		cout << "Enter two numbers: ";
		cin >> p >> q;
		addNumbers(p, q, answer);
		cout << p << " + " << q << " = " << answer << endl;
	}
	/* end of program */
	return 0;
}
