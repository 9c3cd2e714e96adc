/*
 * Assignment 1
 * Written for the introductory programming course
 */
/* header files */
#include<iostream>
#include<conio.h>
/* standard namespace */
using namespace std;
/* program starts here */
int main()
{
	int arr[20], size, i, swap;
	cout<<"Enter the size of array: ";
	/* read input from user */
	cin>>size;
	cout<<"Enter "<<size<<" elements"<<endl;
	/* loop */
	for(i=0; i<size; i++)
	{
		cin>>arr[i];
	}
	swap=arr[0];
	arr[0]=arr[size-1];
	arr[size-1]=swap;
	cout<<"Array after swapping first and last element:"<<endl;
	for(i=0; i<size; i++)
	{
		cout<<arr[i]<<" ";
	}
	getch();
	/* end of program */
	return 0;
}
