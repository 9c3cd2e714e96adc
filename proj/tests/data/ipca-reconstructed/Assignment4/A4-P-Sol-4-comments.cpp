/*
 * Assignment 4
 * Written for the introductory programming course
 */
/* header files */
#include <iostream>
/* standard namespace */
using namespace std;
/* program starts here */
int main()
{
	long number, reverse = 0;
	cout << "Enter number: ";
	/* read input from user */
	cin >> number;
	long original = number;
	/* loop */
	do
	{
		reverse = reverse * 10 + number % 10;
		number = number / 10;
	} while (number > 0);
	cout << "The reverse of " << original << " is " << reverse << endl;
	/* end of program */
	return 0;
}
